# -*- coding: utf-8 -*-
"""
模型模块

四种传统分类器及其优化器，全部在仓库内实现

子模块:
    base: 训练元数据与训练数据校验 (TrainingInfo)
    naive_bayes: 多项式朴素贝叶斯 (NBModel)
    linear: 线性模型与 L-BFGS 逻辑回归 (LinearModel)
    svm: 核函数与 SMO 训练的 SVM (KernelConfig, SvmModel)
    predict: 按模型类型分派的决策函数
    registry: 按名称训练模型

作者: AI Assistant
"""

from hope_detector.models.base import MODEL_KINDS, TrainingInfo
from hope_detector.models.linear import (
    LinearModel,
    collapse_linear,
    logistic_objective,
    train_logreg,
)
from hope_detector.models.naive_bayes import NBModel, predict_nb, train_nb
from hope_detector.models.predict import (
    decision_function,
    decision_values,
    predict_label,
    predict_labels,
    top_features,
)
from hope_detector.models.registry import HYPERPARAMETERS, check_hyperparameters, train_model
from hope_detector.models.svm import KernelConfig, SvmModel, default_gamma, kernel_matrix, train_svm

__all__ = [
    "HYPERPARAMETERS",
    "KernelConfig",
    "LinearModel",
    "MODEL_KINDS",
    "NBModel",
    "SvmModel",
    "TrainingInfo",
    "check_hyperparameters",
    "collapse_linear",
    "decision_function",
    "decision_values",
    "default_gamma",
    "kernel_matrix",
    "logistic_objective",
    "predict_label",
    "predict_labels",
    "predict_nb",
    "top_features",
    "train_logreg",
    "train_model",
    "train_nb",
    "train_svm",
]
