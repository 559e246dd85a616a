# -*- coding: utf-8 -*-
"""
模型包读写

一个模型包是单个 UTF-8 文本文件，包含完整的推理流水线:
清洗配置、n-gram 配置、词表、可选的 idf 和模型参数

文件格式:
    HOPEBUNDLE<TAB>1
    [cleaning]      清洗开关与资源标识
    [ngram]         n-gram 配置
    [vocabulary]    词表大小 + 每行 "term<TAB>index"
    [tfidf]         kind<TAB>none 或 kind<TAB>l2 + 每个词一行 idf
    [model]         模型参数
    sha256<TAB><前面所有字节的 SHA-256>

字段顺序固定，实数用 17 位有效数字的十进制文本，同一个模型包总是写出相同的字节

作者: AI Assistant
"""

import hashlib
import logging
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Optional, Union

import numpy as np
from scipy import sparse

from hope_detector import config
from hope_detector.errors import (
    BundleFormatError,
    BundleInvariantError,
    ChecksumError,
    ConfigError,
    DataError,
    UnsupportedVersionError,
)
from hope_detector.features.ngrams import NGramConfig
from hope_detector.features.tfidf import TfidfModel
from hope_detector.features.vectorizer import Vectorizer
from hope_detector.features.vocabulary import Vocabulary
from hope_detector.metrics.report import format_real
from hope_detector.models.linear import LinearModel
from hope_detector.models.naive_bayes import NBModel
from hope_detector.models.svm import KernelConfig, SvmModel
from hope_detector.preprocess.cleaner import CleaningConfig

logger = logging.getLogger(__name__)

MAGIC = "HOPEBUNDLE"
CHECKSUM_KEY = "sha256"
SECTION_ORDER = ("cleaning", "ngram", "vocabulary", "tfidf", "model")


@dataclass(frozen=True)
class ModelBundle:
    """
    训练好的完整流水线

    属性:
        cleaning: 清洗配置
        ngram: n-gram 配置
        vocabulary: 词表（其 config 与 ngram 相同）
        model: NBModel / LinearModel / SvmModel
        tfidf: TF-IDF 模型，计数特征时为 None
        version: 格式版本
    """
    cleaning: CleaningConfig
    ngram: NGramConfig
    vocabulary: Vocabulary
    model: Union[NBModel, LinearModel, SvmModel]
    tfidf: Optional[TfidfModel] = None
    version: int = config.BUNDLE_FORMAT_VERSION

    __hash__ = None

    @property
    def vectorizer_name(self):
        return "tfidf" if self.tfidf is not None else "count"

    @property
    def model_name(self):
        """网格中的模型名称（nb / logreg / svm-linear / svm-rbf）"""
        if isinstance(self.model, NBModel):
            return "nb"
        if isinstance(self.model, LinearModel):
            return "logreg" if self.model.kind == "logistic" else "svm-linear"
        return "svm-rbf" if self.model.kernel.kind == "rbf" else "svm-linear"

    @property
    def vectorizer(self):
        return Vectorizer.from_parts(self.vocabulary, self.tfidf)


def check_bundle(bundle):
    """
    检查模型包内部一致性

    Raises:
        BundleInvariantError: 维度或配置不一致
    """
    size = len(bundle.vocabulary)
    if bundle.version not in config.SUPPORTED_BUNDLE_VERSIONS:
        raise UnsupportedVersionError(f"不支持的模型包版本: {bundle.version}")
    if bundle.vocabulary.config != bundle.ngram:
        raise BundleInvariantError("词表的 n-gram 配置与模型包的 n-gram 配置不一致")
    if bundle.tfidf is not None and bundle.tfidf.vocabulary != bundle.vocabulary:
        raise BundleInvariantError("idf 对应的词表与模型包的词表不一致")
    if bundle.model.dim != size:
        raise BundleInvariantError(f"模型维度 {bundle.model.dim} 与词表大小 {size} 不一致")
    for name in ("stopword_list_id", "lemma_table_id"):
        value = getattr(bundle.cleaning, name)
        if not value or any(ch in value for ch in "\t\r\n"):
            raise BundleInvariantError(f"清洗配置 {name} 不能为空或包含制表符、换行")


# ==================== 写出 ====================

def _bool(value):
    return "true" if value else "false"


def _dump_model(model):
    if isinstance(model, NBModel):
        lines = ["kind\tnb", f"alpha\t{format_real(model.alpha)}"]
        lines.append("prior\t" + "\t".join(format_real(v) for v in model.class_log_prior))
        lines.extend(
            f"loglik\t{format_real(h)}\t{format_real(n)}"
            for h, n in zip(model.feature_log_prob[0], model.feature_log_prob[1])
        )
        return lines
    if isinstance(model, LinearModel):
        lines = [
            "kind\tlinear",
            f"type\t{model.kind}",
            f"C\t{format_real(model.C)}",
            f"bias\t{format_real(model.bias)}",
        ]
        lines.extend(f"weight\t{format_real(w)}" for w in model.weights)
        return lines

    gamma = "none" if model.kernel.gamma is None else format_real(model.kernel.gamma)
    lines = [
        "kind\tsvm",
        f"kernel\t{model.kernel.kind}",
        f"gamma\t{gamma}",
        f"C\t{format_real(model.C)}",
        f"bias\t{format_real(model.bias)}",
        f"support\t{model.dual_coef.size}",
    ]
    vectors = model.support_vectors.copy()
    vectors.sort_indices()
    for k, coef in enumerate(model.dual_coef):
        start, end = vectors.indptr[k], vectors.indptr[k + 1]
        entries = " ".join(
            f"{col}:{format_real(val)}"
            for col, val in zip(vectors.indices[start:end], vectors.data[start:end])
            if val != 0
        )
        index = str(model.support_indices[k]) if model.support_indices else "-"
        lines.append(f"sv\t{index}\t{format_real(coef)}\t{entries}")
    return lines


def _body(bundle):
    lines = [f"{MAGIC}\t{bundle.version}", "[cleaning]"]
    for f in fields(CleaningConfig):
        value = getattr(bundle.cleaning, f.name)
        lines.append(f"{f.name}\t{_bool(value) if isinstance(value, bool) else value}")

    ngram = bundle.ngram
    lines.append("[ngram]")
    lines.extend([
        f"min_n\t{ngram.min_n}",
        f"max_n\t{ngram.max_n}",
        f"analyzer\t{ngram.analyzer}",
        f"min_df\t{ngram.min_df}",
        f"max_features\t{'none' if ngram.max_features is None else ngram.max_features}",
    ])

    lines.append("[vocabulary]")
    lines.append(f"size\t{len(bundle.vocabulary)}")
    lines.extend(f"{term}\t{i}" for i, term in enumerate(bundle.vocabulary.terms))

    lines.append("[tfidf]")
    if bundle.tfidf is None:
        lines.append("kind\tnone")
    else:
        lines.append(f"kind\t{bundle.tfidf.norm}")
        lines.extend(f"idf\t{format_real(v)}" for v in bundle.tfidf.idf)

    lines.append("[model]")
    lines.extend(_dump_model(bundle.model))
    return "\n".join(lines) + "\n"


def dumps_bundle(bundle):
    """
    序列化为规范文本（含校验和行）

    Raises:
        BundleInvariantError: 模型包内部不一致
    """
    check_bundle(bundle)
    body = _body(bundle)
    digest = hashlib.sha256(body.encode("utf-8")).hexdigest()
    return f"{body}{CHECKSUM_KEY}\t{digest}\n"


def bundle_digest(bundle):
    """模型包规范文本的 SHA-256，用于比较两次拟合的产物是否完全相同"""
    return hashlib.sha256(dumps_bundle(bundle).encode("utf-8")).hexdigest()


def save_bundle(bundle, path):
    """
    保存模型包；一致性检查在写文件之前完成

    Args:
        bundle: ModelBundle
        path: 目标文件路径
    """
    text = dumps_bundle(bundle)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(text.encode("utf-8"))
    logger.info("模型包已保存: %s (%s + %s)", path, bundle.vectorizer_name, bundle.model_name)


# ==================== 读取 ====================

class _Records:
    """按固定顺序逐行读取一个段落的记录"""

    def __init__(self, name, records):
        self.name = name
        self.records = records
        self.position = 0

    def next(self, key, count=1):
        """读取下一行，要求键为 key 且恰好有 count 个值"""
        if self.position >= len(self.records):
            raise BundleFormatError(f"[{self.name}] 段缺少 {key}")
        row, parts = self.records[self.position]
        self.position += 1
        if key is not None and parts[0] != key:
            raise BundleFormatError(f"第 {row} 行: [{self.name}] 段期望 {key}，实际为 {parts[0]!r}")
        if len(parts) != count + 1:
            raise BundleFormatError(f"第 {row} 行: [{self.name}] 段 {parts[0]} 的字段数错误")
        return parts[1] if count == 1 else parts[1:]

    def next_row(self, width):
        """读取下一行原始字段（词表行没有键）"""
        if self.position >= len(self.records):
            raise BundleFormatError(f"[{self.name}] 段内容不完整")
        row, parts = self.records[self.position]
        self.position += 1
        if len(parts) != width:
            raise BundleFormatError(f"第 {row} 行: [{self.name}] 段字段数错误")
        return row, parts

    def finish(self):
        if self.position != len(self.records):
            row, _ = self.records[self.position]
            raise BundleFormatError(f"第 {row} 行: [{self.name}] 段有多余内容")


def _real(text):
    try:
        value = float(text)
    except ValueError as e:
        raise BundleFormatError(f"无法解析的实数: {text!r}") from e
    if not np.isfinite(value):
        raise BundleFormatError(f"实数必须有限: {text!r}")
    return value


def _integer(text):
    if not text.lstrip("-").isdigit():
        raise BundleFormatError(f"无法解析的整数: {text!r}")
    return int(text)


def _boolean(text):
    if text not in ("true", "false"):
        raise BundleFormatError(f"无法解析的布尔值: {text!r}")
    return text == "true"


def _verify_checksum(text):
    """校验最后一行的 SHA-256，返回不含校验和行的正文"""
    marker = f"{CHECKSUM_KEY}\t"
    start = text.rfind(marker)
    if start < 0 or (start > 0 and text[start - 1] != "\n"):
        raise ChecksumError("模型包缺少校验和（文件可能被截断）")
    body, line = text[:start], text[start:]
    if not line.endswith("\n") or "\n" in line[:-1]:
        raise ChecksumError("校验和行格式错误（文件可能被截断）")
    expected = line[len(marker):-1]
    actual = hashlib.sha256(body.encode("utf-8")).hexdigest()
    if expected != actual:
        raise ChecksumError("模型包校验和不匹配")
    return body


def _split_sections(lines):
    sections = {}
    current = None
    for row, line in enumerate(lines, start=2):
        if line.startswith("[") and line.endswith("]") and "\t" not in line:
            current = line[1:-1]
            if current in sections:
                raise BundleFormatError(f"第 {row} 行: 重复的段 [{current}]")
            sections[current] = []
        elif current is None:
            raise BundleFormatError(f"第 {row} 行: 段标题之前出现内容")
        else:
            sections[current].append((row, line.split("\t")))
    if tuple(sections) != SECTION_ORDER:
        raise BundleFormatError(f"段顺序错误: {list(sections)}（应为 {list(SECTION_ORDER)}）")
    return {name: _Records(name, records) for name, records in sections.items()}


def _load_cleaning(records):
    values = {}
    for f in fields(CleaningConfig):
        raw = records.next(f.name)
        values[f.name] = raw if f.name in ("stopword_list_id", "lemma_table_id") else _boolean(raw)
    records.finish()
    return CleaningConfig(**values)


def _load_ngram(records):
    min_n = _integer(records.next("min_n"))
    max_n = _integer(records.next("max_n"))
    analyzer = records.next("analyzer")
    min_df = _integer(records.next("min_df"))
    raw_cap = records.next("max_features")
    records.finish()
    max_features = None if raw_cap == "none" else _integer(raw_cap)
    return NGramConfig(min_n=min_n, max_n=max_n, analyzer=analyzer, min_df=min_df, max_features=max_features)


def _load_vocabulary(records, ngram):
    size = _integer(records.next("size"))
    terms = []
    for i in range(size):
        row, (term, raw_index) = records.next_row(2)
        index = _integer(raw_index)
        if index != i:
            raise BundleFormatError(f"第 {row} 行: 词表下标不连续")
        terms.append(term)
    records.finish()
    return Vocabulary(terms=tuple(terms), config=ngram)


def _load_tfidf(records, vocabulary):
    kind = records.next("kind")
    if kind == "none":
        records.finish()
        return None
    idf = [_real(records.next("idf")) for _ in range(len(vocabulary))]
    records.finish()
    return TfidfModel(idf=np.array(idf), vocabulary=vocabulary, norm=kind)


def _load_model(records, dim):
    kind = records.next("kind")
    if kind == "nb":
        alpha = _real(records.next("alpha"))
        prior = [_real(v) for v in records.next("prior", count=2)]
        loglik = [[_real(v) for v in records.next("loglik", count=2)] for _ in range(dim)]
        records.finish()
        loglik = np.array(loglik, dtype=np.float64).reshape(dim, 2).T
        return NBModel(class_log_prior=np.array(prior), feature_log_prob=loglik, alpha=alpha)

    if kind == "linear":
        linear_kind = records.next("type")
        C = _real(records.next("C"))
        bias = _real(records.next("bias"))
        weights = [_real(records.next("weight")) for _ in range(dim)]
        records.finish()
        return LinearModel(weights=np.array(weights), bias=bias, C=C, kind=linear_kind)

    if kind == "svm":
        kernel_kind = records.next("kernel")
        raw_gamma = records.next("gamma")
        C = _real(records.next("C"))
        bias = _real(records.next("bias"))
        count = _integer(records.next("support"))
        indices, coefs, rows, cols, data = [], [], [], [], []
        for k in range(count):
            index, coef, entries = records.next("sv", count=3)
            if index != "-":
                indices.append(_integer(index))
            coefs.append(_real(coef))
            for entry in entries.split():
                col, sep, value = entry.partition(":")
                if not sep:
                    raise BundleFormatError(f"支持向量条目格式错误: {entry!r}")
                rows.append(k)
                cols.append(_integer(col))
                data.append(_real(value))
        records.finish()
        if indices and len(indices) != count:
            raise BundleFormatError("支持向量下标不完整")
        if any(c < 0 or c >= dim for c in cols):
            raise BundleInvariantError(f"支持向量的列下标超出词表大小 {dim}")
        vectors = sparse.csr_matrix((data, (rows, cols)), shape=(count, dim), dtype=np.float64)
        gamma = None if raw_gamma == "none" else _real(raw_gamma)
        return SvmModel(
            kernel=KernelConfig(kernel_kind, gamma=gamma),
            dual_coef=np.array(coefs),
            support_vectors=vectors,
            bias=bias,
            C=C,
            support_indices=tuple(indices),
        )

    raise BundleFormatError(f"未知的模型类型: {kind!r}")


def loads_bundle(data):
    """
    从字节或文本解析模型包

    检查顺序: 空文件 -> 校验和 -> 版本 -> 格式 -> 不变量

    Raises:
        BundleFormatError: 空文件或格式错误
        ChecksumError: 校验和缺失或不匹配（包括文件被截断）
        UnsupportedVersionError: 版本不受支持
        BundleInvariantError: 内容违反不变量
    """
    if isinstance(data, bytes):
        if not data:
            raise BundleFormatError("模型包文件为空")
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise BundleFormatError(f"模型包不是合法的 UTF-8 文本: {e}") from e
    else:
        text = data
    if not text:
        raise BundleFormatError("模型包文件为空")

    body = _verify_checksum(text)
    lines = body.split("\n")[:-1]
    if not lines:
        raise BundleFormatError("模型包缺少版本头")
    magic, sep, raw_version = lines[0].partition("\t")
    if magic != MAGIC or not sep or not raw_version.isdigit():
        raise BundleFormatError(f"模型包版本头错误: {lines[0]!r}")
    version = int(raw_version)
    if version not in config.SUPPORTED_BUNDLE_VERSIONS:
        raise UnsupportedVersionError(
            f"不支持的模型包版本 {version}（支持: {', '.join(map(str, config.SUPPORTED_BUNDLE_VERSIONS))}）"
        )

    sections = _split_sections(lines[1:])
    try:
        cleaning = _load_cleaning(sections["cleaning"])
        ngram = _load_ngram(sections["ngram"])
        vocabulary = _load_vocabulary(sections["vocabulary"], ngram)
        tfidf = _load_tfidf(sections["tfidf"], vocabulary)
        model = _load_model(sections["model"], len(vocabulary))
        bundle = ModelBundle(
            cleaning=cleaning,
            ngram=ngram,
            vocabulary=vocabulary,
            model=model,
            tfidf=tfidf,
            version=version,
        )
        check_bundle(bundle)
    except BundleFormatError:
        raise
    except (DataError, ConfigError) as e:
        raise BundleInvariantError(f"模型包内容无效: {e}") from e
    return bundle


def load_bundle(path):
    """
    读取并完整校验模型包

    Args:
        path: 模型包文件路径

    Returns:
        ModelBundle: 校验通过的模型包
    """
    path = Path(path)
    try:
        data = path.read_bytes()
    except FileNotFoundError as e:
        raise DataError(f"模型包不存在: {path}") from e
    bundle = loads_bundle(data)
    logger.info("模型包已加载: %s (%s + %s)", path, bundle.vectorizer_name, bundle.model_name)
    return bundle
