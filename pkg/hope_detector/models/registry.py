# -*- coding: utf-8 -*-
"""
按名称训练模型

实验网格和命令行用模型名称（nb / logreg / svm-linear / svm-rbf）加超参数字典训练模型，
未给出的超参数使用各训练函数的默认值

作者: AI Assistant
"""

from hope_detector.errors import ConfigError
from hope_detector.models.base import MODEL_KINDS
from hope_detector.models.linear import collapse_linear, train_logreg
from hope_detector.models.naive_bayes import train_nb
from hope_detector.models.svm import KernelConfig, train_svm

# 每个模型允许的超参数
HYPERPARAMETERS = {
    "nb": ("alpha",),
    "logreg": ("C", "tol", "max_iter"),
    "svm-linear": ("C", "tol", "max_iter"),
    "svm-rbf": ("C", "tol", "max_iter", "gamma"),
}


def check_hyperparameters(name, params):
    """
    校验模型名称和超参数名

    Raises:
        ConfigError: 未知模型或未知超参数
    """
    if name not in MODEL_KINDS:
        raise ConfigError(f"未知的模型: {name!r}（可选: {', '.join(MODEL_KINDS)}）")
    unknown = sorted(set(params or {}) - set(HYPERPARAMETERS[name]))
    if unknown:
        raise ConfigError(f"模型 {name} 不支持的超参数: {', '.join(unknown)}")


def train_model(name, X, y, params=None):
    """
    训练指定名称的模型

    svm-linear 先用 SMO 求解对偶问题，再折叠为原始形式的 LinearModel

    Args:
        name: 模型名称
        X: 训练特征矩阵
        y: 训练标签
        params: 超参数字典

    Returns:
        NBModel / LinearModel / SvmModel
    """
    params = dict(params or {})
    check_hyperparameters(name, params)
    if name == "nb":
        return train_nb(X, y, **params)
    if name == "logreg":
        return train_logreg(X, y, **params)
    if name == "svm-linear":
        return collapse_linear(train_svm(X, y, kernel=KernelConfig("linear"), **params))
    gamma = params.pop("gamma", None)
    return train_svm(X, y, kernel=KernelConfig("rbf", gamma=gamma), **params)
