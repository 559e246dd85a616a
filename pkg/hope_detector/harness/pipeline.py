# -*- coding: utf-8 -*-
"""
单个流水线的训练与预测

fit_pipeline 只使用训练集: 清洗 -> 拟合词表和 idf -> 训练模型，
结果打包成 ModelBundle；预测时用模型包里的清洗配置和词表处理新数据

作者: AI Assistant
"""

import logging
from pathlib import Path

from hope_detector.errors import BundleMismatchError
from hope_detector.features.ngrams import NGramConfig
from hope_detector.features.vectorizer import Vectorizer
from hope_detector.metrics.evaluation import evaluate
from hope_detector.models.predict import predict_labels
from hope_detector.models.registry import check_hyperparameters, train_model
from hope_detector.persist.bundle import ModelBundle
from hope_detector.preprocess.cleaner import CleaningConfig, clean_dataset

logger = logging.getLogger(__name__)

PREDICTIONS_HEADER = "id\tlabel"


def bundle_from_parts(cleaning, vectorizer, model):
    """由已拟合的向量化器和模型组装模型包"""
    return ModelBundle(
        cleaning=cleaning,
        ngram=vectorizer.ngram_config,
        vocabulary=vectorizer.vocabulary,
        model=model,
        tfidf=vectorizer.tfidf,
    )


def fit_pipeline(train, vectorizer="tfidf", model="svm-linear", cleaning=None, ngram=None, params=None):
    """
    在训练集上拟合一个 (向量化方式, 模型) 组合

    Args:
        train: 带标签的训练集（原始文本）
        vectorizer: count 或 tfidf
        model: nb / logreg / svm-linear / svm-rbf
        cleaning: CleaningConfig，默认开启全部规则
        ngram: NGramConfig，默认 (1, 8) 词 n-gram
        params: 模型超参数

    Returns:
        ModelBundle: 可保存、可直接用于预测的模型包
    """
    cleaning = cleaning or CleaningConfig()
    ngram = ngram or NGramConfig()
    check_hyperparameters(model, params)
    cleaned = clean_dataset(train, cleaning)
    fitted = Vectorizer(vectorizer, ngram).fit(cleaned)
    trained = train_model(model, fitted.transform(cleaned), cleaned.labels, params)
    return bundle_from_parts(cleaning, fitted, trained)


def check_compatible(bundle, cleaning=None, ngram=None):
    """
    检查模型包与当前流水线配置是否一致

    Raises:
        BundleMismatchError: 清洗配置或 n-gram 配置不同
    """
    if cleaning is not None and cleaning != bundle.cleaning:
        raise BundleMismatchError("模型包的清洗配置与当前配置不一致")
    if ngram is not None and ngram != bundle.ngram:
        raise BundleMismatchError("模型包的 n-gram 配置与当前配置不一致")


def bundle_features(bundle, dataset):
    """用模型包的清洗配置和词表把数据集变换为特征矩阵"""
    cleaned = clean_dataset(dataset, bundle.cleaning)
    return bundle.vectorizer.transform(cleaned)


def predict_dataset(bundle, dataset):
    """
    预测数据集中每个文档的标签

    Returns:
        List[Label]: 与输入顺序一致
    """
    if len(dataset) == 0:
        return []
    return predict_labels(bundle.model, bundle_features(bundle, dataset))


def evaluate_bundle(bundle, dataset):
    """在带标签的数据集上评估模型包"""
    return evaluate(dataset.labels, predict_dataset(bundle, dataset))


def format_predictions(ids, labels):
    """预测文件内容: 表头 + 每个文档一行 "id<TAB>label"，按输入顺序"""
    lines = [PREDICTIONS_HEADER]
    lines.extend(f"{doc_id}\t{label.display}" for doc_id, label in zip(ids, labels, strict=True))
    return "\n".join(lines) + "\n"


def predict_file(bundle, dataset, path, cleaning=None, ngram=None):
    """
    对无标签数据集做预测并写出 TSV 文件

    Args:
        bundle: ModelBundle
        dataset: 要预测的数据集（标签会被忽略）
        path: 输出文件路径
        cleaning: 期望的清洗配置，给出时必须与模型包一致
        ngram: 期望的 n-gram 配置，给出时必须与模型包一致

    Returns:
        int: 写出的预测行数（不含表头）

    Raises:
        BundleMismatchError: 模型包与期望配置不一致
    """
    check_compatible(bundle, cleaning, ngram)
    labels = predict_dataset(bundle, dataset)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(format_predictions(dataset.ids, labels).encode("utf-8"))
    logger.info("预测结果已写入 %s: %d 行", path, len(labels))
    return len(labels)
