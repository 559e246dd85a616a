# -*- coding: utf-8 -*-
"""
预处理资源模块

停用词表和词形还原表以纯文本数据文件随包发布:
    - 首行是版本头: "#version<TAB><资源标识>"
    - 停用词表每行一个小写词
    - 词形还原表每行 "屈折形式<TAB>词元"

资源标识既可以是内置资源名（如 en-basic-v1），也可以是数据文件路径

作者: AI Assistant
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Dict, FrozenSet, Tuple

from hope_detector import config
from hope_detector.errors import DataFormatError

logger = logging.getLogger(__name__)

# 内置资源标识 -> 数据文件名
STOPWORD_FILES = {"en-basic-v1": "stopwords_en_basic_v1.txt"}
LEMMA_FILES = {"en-basic-v1": "lemmas_en_basic_v1.txt"}


@dataclass(frozen=True)
class StopwordList:
    """固定版本的小写英文停用词集合"""
    list_id: str
    words: FrozenSet[str]

    def __post_init__(self):
        if "" in self.words:
            raise DataFormatError(f"停用词表 {self.list_id} 含有空串")
        upper = sorted(w for w in self.words if w != w.lower())
        if upper:
            raise DataFormatError(f"停用词表 {self.list_id} 含有非小写词: {upper[:5]}")

    def __contains__(self, token):
        return token in self.words

    def __len__(self):
        return len(self.words)


@dataclass(frozen=True)
class SuffixRule:
    """
    后缀规则

    词以 suffix 结尾且去掉后缀后的词干长度 >= min_stem 时，用 replacement 替换后缀；
    replacement 与 suffix 相同的规则用来保护词尾（如 -ss），命中后词保持不变
    """
    suffix: str
    replacement: str
    min_stem: int = 3

    def apply(self, word):
        """命中时返回替换结果，否则返回 None"""
        if not word.endswith(self.suffix):
            return None
        stem = word[: len(word) - len(self.suffix)]
        if len(stem) < self.min_stem:
            return None
        return stem + self.replacement


# 后缀回退规则，按声明顺序匹配，第一个命中的规则生效
DEFAULT_SUFFIX_RULES = (
    SuffixRule("ss", "ss", 0),
    SuffixRule("us", "us", 0),
    SuffixRule("is", "is", 0),
    SuffixRule("eed", "eed", 0),
    SuffixRule("sses", "ss"),
    SuffixRule("ies", "y"),
    SuffixRule("ches", "ch"),
    SuffixRule("shes", "sh"),
    SuffixRule("xes", "x"),
    SuffixRule("ing", ""),
    SuffixRule("ed", ""),
    SuffixRule("s", ""),
)


@dataclass(frozen=True)
class LemmaTable:
    """
    词形还原表

    词典查找优先；未命中时按顺序尝试后缀规则；都不命中则保持原词
    """
    table_id: str
    entries: Dict[str, str] = field(hash=False)
    suffix_rules: Tuple[SuffixRule, ...] = DEFAULT_SUFFIX_RULES

    def lookup(self, word):
        """单步还原：词典 -> 后缀规则 -> 原词"""
        lemma = self.entries.get(word)
        if lemma is not None:
            return lemma
        for rule in self.suffix_rules:
            result = rule.apply(word)
            if result is not None:
                return result
        return word

    def lemma(self, word):
        """
        反复还原直到不再变化

        保证 lemma(lemma(w)) == lemma(w)；遇到循环时停在循环中第一次重复前的词
        """
        seen = {word}
        current = word
        while True:
            following = self.lookup(current)
            if following == current or following in seen:
                return current
            seen.add(following)
            current = following


# ==================== 资源加载 ====================

def _read_resource(resource_id, registry, kind):
    """读取资源文件，返回 (版本标识, 数据行列表)"""
    if resource_id in registry:
        text = (config.RESOURCE_DIR / registry[resource_id]).read_text(encoding="utf-8")
        source = registry[resource_id]
    else:
        path = Path(resource_id)
        if not path.is_file():
            raise DataFormatError(f"未知的{kind}: {resource_id}")
        text = path.read_text(encoding="utf-8")
        source = str(path)

    lines = text.splitlines()
    if not lines or not lines[0].startswith("#version\t"):
        raise DataFormatError(f"{kind} {source} 缺少版本头")
    version = lines[0].split("\t", 1)[1].strip()
    return version, [line for line in lines[1:] if line.strip()]


@lru_cache(maxsize=None)
def load_stopwords(list_id):
    """
    加载停用词表

    Args:
        list_id: 内置资源名或数据文件路径

    Returns:
        StopwordList: 停用词表
    """
    version, lines = _read_resource(list_id, STOPWORD_FILES, "停用词表")
    words = frozenset(line.strip() for line in lines)
    logger.debug("停用词表 %s (%s): %d 个词", list_id, version, len(words))
    return StopwordList(list_id=list_id, words=words)


@lru_cache(maxsize=None)
def load_lemma_table(table_id):
    """
    加载词形还原表

    Args:
        table_id: 内置资源名或数据文件路径

    Returns:
        LemmaTable: 词典 + 默认后缀规则
    """
    version, lines = _read_resource(table_id, LEMMA_FILES, "词形还原表")
    entries = {}
    for line in lines:
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise DataFormatError(f"词形还原表 {table_id} 格式错误: {line!r}")
        entries[parts[0]] = parts[1]
    logger.debug("词形还原表 %s (%s): %d 条", table_id, version, len(entries))
    return LemmaTable(table_id=table_id, entries=entries)
