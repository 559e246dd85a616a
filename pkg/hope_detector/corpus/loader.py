# -*- coding: utf-8 -*-
"""
数据集读写模块

读取 csv / tsv（首行为表头）和 jsonl（每行一个 JSON 对象）格式的数据集，
按源文件顺序生成不可变的 Dataset；也可以把数据集写回同样的格式

作者: AI Assistant
"""

import csv
import json
import logging
from pathlib import Path

from hope_detector import config
from hope_detector.corpus.models import Dataset, DatasetSchema, Document, Label, Split
from hope_detector.errors import DataFormatError, UnlabeledError, UsageError

logger = logging.getLogger(__name__)


# ==================== 辅助函数 ====================

def _check_format(format):
    if format not in config.SUPPORTED_FORMATS:
        raise UsageError(f"不支持的数据格式: {format}（可选: {', '.join(config.SUPPORTED_FORMATS)}）")


def _csv_options(format):
    """csv / tsv 的读写参数；tsv 不做引号处理，原样保留文本中的引号"""
    if format == "tsv":
        return {"delimiter": "\t", "quoting": csv.QUOTE_NONE, "quotechar": None}
    return {"delimiter": ","}


def _make_document(split, index, row, text, label_value, doc_id):
    """由一行原始字段构造文档，空标签视为无标签"""
    label = None
    if label_value is not None and label_value.strip():
        label = Label.parse(label_value, row=row)
    if doc_id is None or not str(doc_id).strip():
        doc_id = f"{split.value}-{index}"
    return Document(id=str(doc_id), text=text, label=label)


def _read_delimited(path, format, schema, split):
    """逐行读取 csv / tsv，列数与表头不一致时报告源文件行号"""
    documents = []
    with open(path, newline="", encoding="utf-8-sig") as f:
        reader = csv.reader(f, **_csv_options(format))
        try:
            header = next(reader, None)
            if header is None:
                return documents
            if schema.text_column not in header:
                raise DataFormatError(f"表头中没有文本列 {schema.text_column!r}", row=1)
            text_at = header.index(schema.text_column)
            label_at = header.index(schema.label_column) if schema.label_column in header else None
            id_at = header.index(schema.id_column) if schema.id_column in header else None
            if schema.id_column and id_at is None:
                raise DataFormatError(f"表头中没有 id 列 {schema.id_column!r}", row=1)

            for row in reader:
                if not row:
                    # 空行直接跳过，不占用行序号
                    continue
                if len(row) != len(header):
                    raise DataFormatError(
                        f"应有 {len(header)} 列，实际 {len(row)} 列", row=reader.line_num
                    )
                documents.append(_make_document(
                    split,
                    len(documents),
                    reader.line_num,
                    row[text_at],
                    row[label_at] if label_at is not None else None,
                    row[id_at] if id_at is not None else None,
                ))
        except csv.Error as e:
            raise DataFormatError(str(e), row=reader.line_num) from e
    return documents


def _read_jsonl(path, schema, split):
    """逐行读取 jsonl，空行跳过"""
    documents = []
    with open(path, encoding="utf-8-sig") as f:
        for line_no, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as e:
                raise DataFormatError(f"JSON 解析失败: {e.msg}", row=line_no) from e
            if not isinstance(record, dict):
                raise DataFormatError("每行必须是一个 JSON 对象", row=line_no)
            if schema.text_column not in record:
                raise DataFormatError(f"缺少文本字段 {schema.text_column!r}", row=line_no)
            text = record[schema.text_column]
            if not isinstance(text, str):
                raise DataFormatError("文本字段必须是字符串", row=line_no)
            label_value = record.get(schema.label_column) if schema.label_column else None
            doc_id = record.get(schema.id_column) if schema.id_column else None
            documents.append(_make_document(
                split,
                len(documents),
                line_no,
                text,
                None if label_value is None else str(label_value),
                doc_id,
            ))
    return documents


# ==================== 核心功能 ====================

def load_dataset(path, format="csv", schema=None, split=Split.Train):
    """
    加载数据集

    保持源文件行顺序；没有 id 列时自动生成 "<split>-<行序号>"

    Args:
        path: 数据文件路径
        format: csv / tsv / jsonl
        schema: 列映射，默认 text / label 两列
        split: 数据集所属划分，训练集和开发集必须全部带标签

    Returns:
        Dataset: 加载的数据集

    Raises:
        DataFormatError: 文件不存在、列数不一致、JSON 错误、id 重复
        LabelError: 未知标签
        UnlabeledError: 训练集 / 开发集存在无标签文档
    """
    _check_format(format)
    schema = schema or DatasetSchema()
    split = Split(split)
    path = Path(path)
    if not path.exists():
        raise DataFormatError(f"文件不存在: {path}")

    if format == "jsonl":
        documents = _read_jsonl(path, schema, split)
    else:
        documents = _read_delimited(path, format, schema, split)

    seen = set()
    for doc in documents:
        if doc.id in seen:
            raise DataFormatError(f"id 重复: {doc.id}")
        seen.add(doc.id)

    dataset = Dataset(split=split, documents=tuple(documents))

    if split in (Split.Train, Split.Dev) and not dataset.is_labeled():
        missing = sum(1 for doc in dataset if doc.label is None)
        raise UnlabeledError(f"{split.value} 集有 {missing} 条文档缺少标签: {path}")

    empty = dataset.empty_document_ids()
    if empty:
        logger.warning("%s 中有 %d 条空文本: %s", path, len(empty), ", ".join(empty[:5]))
    logger.info("已加载 %s: %d 条文档 (%s)", path, len(dataset), split.value)
    return dataset


def write_dataset(dataset, path, format="csv", schema=None):
    """
    按指定格式写出数据集

    写出的列依次为 id（schema 指定时）、文本、标签（数据集带标签时）

    Args:
        dataset: 要写出的数据集
        path: 输出文件路径
        format: csv / tsv / jsonl
        schema: 列映射
    """
    _check_format(format)
    schema = schema or DatasetSchema()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with_labels = schema.label_column is not None and any(
        doc.label is not None for doc in dataset
    )

    if format == "jsonl":
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            for doc in dataset:
                record = {}
                if schema.id_column:
                    record[schema.id_column] = doc.id
                record[schema.text_column] = doc.text
                if with_labels:
                    record[schema.label_column] = doc.label.display if doc.label else None
                f.write(json.dumps(record, ensure_ascii=False) + "\n")
        return

    header = []
    if schema.id_column:
        header.append(schema.id_column)
    header.append(schema.text_column)
    if with_labels:
        header.append(schema.label_column)

    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n", **_csv_options(format))
        try:
            writer.writerow(header)
            for doc in dataset:
                row = [doc.id] if schema.id_column else []
                row.append(doc.text)
                if with_labels:
                    row.append(doc.label.display if doc.label else "")
                writer.writerow(row)
        except csv.Error as e:
            raise DataFormatError(f"无法写出 {format}: {e}") from e
