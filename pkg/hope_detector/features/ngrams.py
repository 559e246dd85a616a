# -*- coding: utf-8 -*-
"""
词 n-gram 提取

- tokenize: 取长度 >= 2 的连续字母/数字串（单字符词被丢弃）
- ngrams: 生成连续的词 n-gram，用单个空格连接

作者: AI Assistant
"""

from dataclasses import asdict, dataclass, fields
from typing import Optional

import regex

from hope_detector.errors import ConfigError

# 连续的字母或数字
TOKEN_PATTERN = regex.compile(r"[\p{L}\p{Nd}]+")


@dataclass(frozen=True)
class NGramConfig:
    """
    n-gram 配置

    默认 min_n=1, max_n=8, 词分析器, min_df=1, 不限制特征数
    """
    min_n: int = 1
    max_n: int = 8
    analyzer: str = "word"
    min_df: int = 1
    max_features: Optional[int] = None

    def __post_init__(self):
        if not isinstance(self.min_n, int) or self.min_n < 1:
            raise ConfigError(f"min_n 必须是 >= 1 的整数: {self.min_n!r}")
        if not isinstance(self.max_n, int) or self.max_n < self.min_n:
            raise ConfigError(f"max_n 必须是 >= min_n 的整数: {self.max_n!r}")
        if self.analyzer != "word":
            raise ConfigError(f"只支持词分析器 (word): {self.analyzer!r}")
        if not isinstance(self.min_df, int) or self.min_df < 1:
            raise ConfigError(f"min_df 必须是 >= 1 的整数: {self.min_df!r}")
        if self.max_features is not None and (
            not isinstance(self.max_features, int) or self.max_features < 1
        ):
            raise ConfigError(f"max_features 必须是正整数: {self.max_features!r}")

    @property
    def ngram_range(self):
        return (self.min_n, self.max_n)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        data = dict(data)
        if "ngram_range" in data:
            data["min_n"], data["max_n"] = data.pop("ngram_range")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"未知的 n-gram 配置项: {', '.join(unknown)}")
        return cls(**data)


def tokenize(text):
    """
    分词

    Args:
        text: 清洗后的文本（或任意字符串）

    Returns:
        List[str]: 按出现顺序排列、长度 >= 2 的字母数字串
    """
    return [token for token in TOKEN_PATTERN.findall(text) if len(token) >= 2]


def ngrams(tokens, config=None):
    """
    生成 n-gram

    先按 n 从小到大，同一 n 内按位置排列，
    例如 ["god", "bless", "you"] -> god, bless, you, god bless, bless you, god bless you

    Args:
        tokens: 词列表
        config: NGramConfig

    Returns:
        List[str]: n-gram 列表
    """
    config = config or NGramConfig()
    count = len(tokens)
    result = []
    for n in range(config.min_n, min(config.max_n, count) + 1):
        result.extend(" ".join(tokens[i:i + n]) for i in range(count - n + 1))
    return result
