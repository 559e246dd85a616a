# -*- coding: utf-8 -*-
"""
预处理模块

提供确定性的文本清洗流水线

子模块:
    cleaner: 清洗配置与清洗规则 (CleaningConfig, clean)
    resources: 停用词表与词形还原表 (StopwordList, LemmaTable)
    data: 随包发布的资源文件

作者: AI Assistant
"""

from hope_detector.preprocess.cleaner import (
    CleaningConfig,
    clean,
    clean_dataset,
    lemmatize,
    remove_stopwords,
    strip_emoji,
    strip_numbers,
    strip_placeholders,
    strip_special,
    strip_urls,
)
from hope_detector.preprocess.resources import (
    LemmaTable,
    StopwordList,
    SuffixRule,
    load_lemma_table,
    load_stopwords,
)

__all__ = [
    "CleaningConfig",
    "LemmaTable",
    "StopwordList",
    "SuffixRule",
    "clean",
    "clean_dataset",
    "lemmatize",
    "load_lemma_table",
    "load_stopwords",
    "remove_stopwords",
    "strip_emoji",
    "strip_numbers",
    "strip_placeholders",
    "strip_special",
    "strip_urls",
]
