# -*- coding: utf-8 -*-
"""
文本清洗模块

确定性的清洗流水线，规则按固定顺序执行:
    strip_urls -> strip_placeholders -> strip_emoji -> lowercase
    -> strip_numbers -> strip_special -> 空白分词
    -> remove_stopwords -> lemmatize -> 单空格拼接

所有规则都是纯函数，可以在线程间并发调用

使用 regex 库匹配 Unicode 属性（Extended_Pictographic），标准库 re 不支持

作者: AI Assistant
"""

import unicodedata
from dataclasses import asdict, dataclass, fields

import regex

from hope_detector.config import DEFAULT_LEMMA_TABLE, DEFAULT_STOPWORD_LIST
from hope_detector.errors import ConfigError
from hope_detector.preprocess.resources import load_lemma_table, load_stopwords


@dataclass(frozen=True)
class CleaningConfig:
    """
    清洗配置

    每条规则一个开关，默认全部开启；停用词表和词形还原表用资源标识引用
    """
    lowercase: bool = True
    strip_urls: bool = True
    strip_emoji: bool = True
    strip_placeholders: bool = True
    strip_numbers: bool = True
    strip_special: bool = True
    remove_stopwords: bool = True
    lemmatize: bool = True
    stopword_list_id: str = DEFAULT_STOPWORD_LIST
    lemma_table_id: str = DEFAULT_LEMMA_TABLE

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        """从配置字典构造，未知键报错"""
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"未知的清洗配置项: {', '.join(unknown)}")
        for name in known - {"stopword_list_id", "lemma_table_id"}:
            if name in data and not isinstance(data[name], bool):
                raise ConfigError(f"清洗配置项 {name} 必须是布尔值")
        return cls(**data)


# ==================== 正则表达式 ====================

URL_PATTERN = regex.compile(r"(?:https?|ftp)://\S+|www\.\S+", regex.IGNORECASE)

# "#USER#" 这类占位符，以及不跨行的 [...] 和 {...}
PLACEHOLDER_PATTERN = regex.compile(r"#\w+#|\[[^\]\n]*\]|\{[^}\n]*\}")

# 表情相关码位: 图形符号、肤色修饰符、区域指示符、变体选择符、组合键帽、标签字符
_EMOJI_CHARS = (
    r"\p{Extended_Pictographic}"
    r"\U0001F3FB-\U0001F3FF"
    r"\U0001F1E6-\U0001F1FF"
    r"\uFE0E\uFE0F"
    r"\u20E3"
    r"\U000E0020-\U000E007F"
)
# 零宽连接符只在紧邻被删除码位时一并删除
EMOJI_PATTERN = regex.compile(rf"\u200D*[{_EMOJI_CHARS}](?:[{_EMOJI_CHARS}]|\u200D)*")

NUMBER_PATTERN = regex.compile(r"\d+")

# 去掉重音符号后的组合附加符（变体选择符留给 strip_emoji）
_COMBINING_MARK = regex.compile(r"(?![\uFE0E\uFE0F])\p{Mn}")

# 特殊字符: 除 ASCII 字母、ASCII 数字、空白和表情码位之外的一切
SPECIAL_PATTERN = regex.compile(rf"[^A-Za-z0-9\s{_EMOJI_CHARS}\u200D]+")


# ==================== 清洗规则 ====================

def strip_urls(text):
    """删除 http/https/ftp 链接和以 www. 开头直到空白的子串"""
    return URL_PATTERN.sub("", text)


def strip_placeholders(text):
    """删除 #USER# 形式的占位符和 [..] / {..} 括号片段"""
    return PLACEHOLDER_PATTERN.sub("", text)


def strip_emoji(text):
    return EMOJI_PATTERN.sub("", text)


def strip_numbers(text):
    """删除完整的连续数字串，小数点等标点留给 strip_special"""
    return NUMBER_PATTERN.sub("", text)


def strip_special(text):
    """
    删除特殊字符

    先做 NFD 分解去掉重音（café -> cafe），再把其余非字母数字字符替换为空格，
    这样 "#hope" 保留 "hope"，"hello,world" 拆成两个词
    """
    text = _COMBINING_MARK.sub("", unicodedata.normalize("NFD", text))
    return SPECIAL_PATTERN.sub(" ", text)


def remove_stopwords(tokens, stopwords):
    """
    删除停用词，保持原有顺序

    Args:
        tokens: 已小写的词列表
        stopwords: StopwordList 或任意支持 in 的集合

    Returns:
        List[str]: 过滤后的词列表
    """
    return [token for token in tokens if token not in stopwords]


def lemmatize(tokens, table):
    """
    逐词还原词元：词典优先，其次第一条命中的后缀规则，否则不变

    Args:
        tokens: 小写词列表
        table: LemmaTable

    Returns:
        List[str]: 还原后的词列表
    """
    return [table.lemma(token) for token in tokens]


def clean(text, config=None):
    """
    按固定顺序执行启用的清洗规则

    开启全部规则时，结果只包含以单空格分隔的小写字母词，可能为空串

    Args:
        text: 原始文本
        config: CleaningConfig，默认开启全部规则

    Returns:
        str: 清洗后的文本
    """
    config = config or CleaningConfig()

    if config.strip_urls:
        text = strip_urls(text)
    if config.strip_placeholders:
        text = strip_placeholders(text)
    if config.strip_emoji:
        text = strip_emoji(text)
    if config.lowercase:
        text = text.lower()
    if config.strip_numbers:
        text = strip_numbers(text)
    if config.strip_special:
        text = strip_special(text)

    tokens = text.split()

    stopwords = load_stopwords(config.stopword_list_id) if config.remove_stopwords else None
    if stopwords is not None:
        tokens = remove_stopwords(tokens, stopwords)
    if config.lemmatize:
        tokens = lemmatize(tokens, load_lemma_table(config.lemma_table_id))
        # 还原后落在停用词表里的词元同样删除，保证 clean 幂等
        if stopwords is not None:
            tokens = remove_stopwords(tokens, stopwords)

    return " ".join(tokens)


def clean_dataset(dataset, config=None):
    """
    清洗整个数据集，返回文本替换后的新数据集（顺序、id、标签不变）
    """
    config = config or CleaningConfig()
    return dataset.with_texts([clean(text, config) for text in dataset.texts])
