# -*- coding: utf-8 -*-
"""
统一的预测接口

decision_function 按模型类型分派:
    LinearModel: w·x + b
    SvmModel:    Σ α_i ŷ_i k(x_i, x) + b
    NBModel:     Hope 与 NotHope 的联合对数似然之差

决策值 >= 0 判为 Hope（恰好为 0 时按规范顺序取 Hope）

作者: AI Assistant
"""

from functools import singledispatch

import numpy as np

from hope_detector.corpus.models import Label
from hope_detector.errors import DataError, DimensionError
from hope_detector.features.sparse import as_vector, to_csr
from hope_detector.models.linear import LinearModel, collapse_linear
from hope_detector.models.naive_bayes import NBModel, joint_log_likelihood
from hope_detector.models.svm import SvmModel, kernel_matrix


def _as_matrix(X, dim):
    matrix = to_csr(X, dim=dim)
    if matrix.shape[1] != dim:
        raise DimensionError(f"特征维度 {matrix.shape[1]} 与模型维度 {dim} 不一致")
    return matrix


# ==================== 单个样本 ====================

@singledispatch
def decision_function(model, x):
    """
    单个样本的决策值

    Args:
        model: LinearModel / SvmModel / NBModel
        x: SparseVector、稠密向量或单行稀疏矩阵

    Returns:
        float: 决策值，>= 0 表示 Hope

    Raises:
        DimensionError: 维度不一致
    """
    raise TypeError(f"不支持的模型类型: {type(model).__name__}")


@decision_function.register
def _(model: LinearModel, x):
    vector = as_vector(x, model.dim)
    return float(np.dot(model.weights[vector.indices], vector.values) + model.bias)


@decision_function.register
def _(model: SvmModel, x):
    vector = as_vector(x, model.dim)
    row = to_csr([vector])
    values = kernel_matrix(row, model.support_vectors, model.kernel) @ model.dual_coef
    return float(values[0] + model.bias)


@decision_function.register
def _(model: NBModel, x):
    vector = as_vector(x, model.dim)
    joint = model.class_log_prior + model.feature_log_prob[:, vector.indices] @ vector.values
    return float(joint[0] - joint[1])


def label_from_value(value):
    return Label.Hope if value >= 0 else Label.NotHope


def predict_label(model, x):
    """单个样本的预测标签"""
    return label_from_value(decision_function(model, x))


# ==================== 批量 ====================

@singledispatch
def decision_values(model, X):
    """
    批量决策值，与逐行调用 decision_function 一致

    Returns:
        np.ndarray: 长度为样本数
    """
    raise TypeError(f"不支持的模型类型: {type(model).__name__}")


@decision_values.register
def _(model: LinearModel, X):
    matrix = _as_matrix(X, model.dim)
    return np.asarray(matrix @ model.weights).reshape(-1) + model.bias


@decision_values.register
def _(model: SvmModel, X):
    matrix = _as_matrix(X, model.dim)
    if matrix.shape[0] == 0:
        return np.empty(0)
    return kernel_matrix(matrix, model.support_vectors, model.kernel) @ model.dual_coef + model.bias


@decision_values.register
def _(model: NBModel, X):
    joint = joint_log_likelihood(model, _as_matrix(X, model.dim))
    return joint[:, 0] - joint[:, 1]


def predict_labels(model, X):
    """批量预测标签"""
    return [label_from_value(value) for value in decision_values(model, X)]


# ==================== 特征检查 ====================

def feature_scores(model):
    """
    每个特征对 Hope 的倾向分数（正数偏向 Hope）

    Raises:
        DataError: RBF 核模型没有按特征分解的权重
    """
    if isinstance(model, NBModel):
        return model.feature_log_prob[0] - model.feature_log_prob[1]
    if isinstance(model, SvmModel):
        model = collapse_linear(model)
    if isinstance(model, LinearModel):
        return model.weights
    raise DataError(f"不支持的模型类型: {type(model).__name__}")


def top_features(model, vocabulary, k=10):
    """
    最能指示每个类别的 n-gram

    Args:
        model: NBModel / LinearModel / 线性核 SvmModel
        vocabulary: 模型对应的词表
        k: 每个类别返回的数量

    Returns:
        Dict[Label, List[Tuple[str, float]]]: 按分数排序，分数相同按词典序
    """
    scores = feature_scores(model)
    if scores.size != len(vocabulary):
        raise DimensionError(f"模型维度 {scores.size} 与词表大小 {len(vocabulary)} 不一致")
    terms = vocabulary.terms
    hope = sorted(range(len(terms)), key=lambda t: (-scores[t], terms[t]))[:k]
    not_hope = sorted(range(len(terms)), key=lambda t: (scores[t], terms[t]))[:k]
    return {
        Label.Hope: [(terms[t], float(scores[t])) for t in hope],
        Label.NotHope: [(terms[t], float(scores[t])) for t in not_hope],
    }
