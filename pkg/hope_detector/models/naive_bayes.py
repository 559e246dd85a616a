# -*- coding: utf-8 -*-
"""
多项式朴素贝叶斯

    log-prior[c]         = ln(N_c / N)
    log-likelihood[c][t] = ln((count_{c,t} + alpha) / (total_c + alpha * V))

TF-IDF 输入时 count 为实数值，按同样的公式累加

作者: AI Assistant
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from hope_detector.corpus.models import LABELS
from hope_detector.errors import DataError, DimensionError
from hope_detector.features.sparse import as_vector, to_csr
from hope_detector.models.base import prepare_training_data

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class NBModel:
    """
    朴素贝叶斯模型参数

    属性:
        class_log_prior: 长度 2，规范标签顺序
        feature_log_prob: 形状 (2, V) 的对数似然
        alpha: 加法平滑参数
    """
    class_log_prior: np.ndarray
    feature_log_prob: np.ndarray
    alpha: float = 1.0

    def __post_init__(self):
        prior = np.array(self.class_log_prior, dtype=np.float64).reshape(-1)
        loglik = np.atleast_2d(np.array(self.feature_log_prob, dtype=np.float64))
        if prior.shape != (2,) or loglik.shape[0] != 2:
            raise DataError("朴素贝叶斯参数必须按两个类别给出")
        if not (self.alpha > 0 and np.isfinite(self.alpha)):
            raise DataError(f"平滑参数 alpha 必须为正: {self.alpha}")
        if not (np.all(np.isfinite(prior)) and np.all(np.isfinite(loglik))):
            raise DataError("朴素贝叶斯参数包含非有限值")
        if abs(logsumexp(prior)) > 1e-9:
            raise DataError("类别先验概率之和不为 1")
        if loglik.shape[1] and np.max(np.abs(np.exp(logsumexp(loglik, axis=1)) - 1.0)) > 1e-9:
            raise DataError("特征似然之和不为 1")
        prior.setflags(write=False)
        loglik.setflags(write=False)
        object.__setattr__(self, "class_log_prior", prior)
        object.__setattr__(self, "feature_log_prob", loglik)
        object.__setattr__(self, "alpha", float(self.alpha))

    @property
    def dim(self):
        return self.feature_log_prob.shape[1]

    def __eq__(self, other):
        if not isinstance(other, NBModel):
            return NotImplemented
        return (
            self.alpha == other.alpha
            and np.array_equal(self.class_log_prior, other.class_log_prior)
            and np.array_equal(self.feature_log_prob, other.feature_log_prob)
        )

    __hash__ = None


def train_nb(X, y, alpha=1.0):
    """
    训练多项式朴素贝叶斯

    Args:
        X: 计数（或 TF-IDF）特征，非负
        y: Label 序列
        alpha: 平滑参数，默认 1.0

    Returns:
        NBModel: 训练好的模型

    Raises:
        SingleClassError: 某个类别没有文档
        DataError: 特征中有负值
    """
    X, classes = prepare_training_data(X, y)
    if X.nnz and X.data.min() < 0:
        raise DataError("朴素贝叶斯的特征值不能为负")
    if not alpha > 0:
        raise DataError(f"平滑参数 alpha 必须为正: {alpha}")

    n_docs, dim = X.shape
    class_count = np.bincount(classes, minlength=2).astype(np.float64)
    feature_count = np.vstack([
        np.asarray(X[classes == c].sum(axis=0)).reshape(-1) for c in range(2)
    ])
    smoothed = feature_count + alpha
    loglik = np.log(smoothed) - np.log(smoothed.sum(axis=1, keepdims=True))
    prior = np.log(class_count) - np.log(n_docs)

    logger.info("朴素贝叶斯训练完成: %d 个文档, %d 维, alpha=%g", n_docs, dim, alpha)
    return NBModel(class_log_prior=prior, feature_log_prob=loglik, alpha=alpha)


def joint_log_likelihood(model, X):
    """
    批量计算每个类别的 log-prior + Σ tf[t]·log-likelihood[t]

    Returns:
        np.ndarray: 形状 (样本数, 2)
    """
    X = to_csr(X, dim=model.dim)
    if X.shape[1] != model.dim:
        raise DimensionError(f"特征维度 {X.shape[1]} 与模型维度 {model.dim} 不一致")
    return np.asarray(X @ model.feature_log_prob.T) + model.class_log_prior


def predict_nb(model, x):
    """
    单个文档的预测

    Args:
        model: NBModel
        x: SparseVector 或稠密向量，维度必须等于 V

    Returns:
        Tuple[Label, np.ndarray]: 预测标签和规范顺序的后验概率；概率相同时取 Hope

    Raises:
        DimensionError: 维度不一致
    """
    vector = as_vector(x, model.dim)
    joint = model.class_log_prior + model.feature_log_prob[:, vector.indices] @ vector.values
    posterior = np.exp(joint - logsumexp(joint))
    return LABELS[int(np.argmax(joint))], posterior
