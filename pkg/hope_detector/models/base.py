# -*- coding: utf-8 -*-
"""
分类器公共部分

训练元数据、训练数据校验和标签编码

作者: AI Assistant
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from hope_detector.corpus.models import LABELS, Label
from hope_detector.errors import DataError, SingleClassError, UnlabeledError
from hope_detector.features.sparse import to_csr

# 网格中的模型名称
MODEL_KINDS = ("nb", "logreg", "svm-linear", "svm-rbf")


@dataclass(frozen=True)
class TrainingInfo:
    """
    优化器运行信息（不参与模型相等比较，也不写入模型包）

    属性:
        iterations: 实际迭代次数
        converged: 是否满足收敛条件
        objective_trace: 逻辑回归每次迭代后的目标函数值
        final_gap: 逻辑回归为梯度无穷范数，SVM 为最大 KKT 违反量
    """
    iterations: int
    converged: bool
    objective_trace: Tuple[float, ...] = ()
    final_gap: float = 0.0


def prepare_training_data(X, y):
    """
    校验训练数据并编码标签

    Args:
        X: 特征矩阵（CSR / 稠密数组 / SparseVector 序列）
        y: Label 序列

    Returns:
        Tuple[csr_matrix, np.ndarray]: CSR 矩阵和按规范顺序编码的类别下标 (Hope=0, NotHope=1)

    Raises:
        DataError: 样本数为 0 或与标签数不一致
        UnlabeledError: 标签中有 None
        SingleClassError: 只有一个类别
    """
    y = list(y)
    if any(label is None for label in y):
        raise UnlabeledError("训练数据中存在无标签文档")
    if not y:
        raise DataError("训练数据为空")
    X = to_csr(X)
    if X.shape[0] != len(y):
        raise DataError(f"样本数 {X.shape[0]} 与标签数 {len(y)} 不一致")
    classes = np.array([Label(label).value for label in y], dtype=np.int64)
    missing = [label.display for label in LABELS if not np.any(classes == label.value)]
    if missing:
        raise SingleClassError(f"训练数据缺少类别: {', '.join(missing)}")
    return X, classes


def signed_targets(classes):
    """类别下标转为 ±1 编码（Hope → +1）"""
    return np.where(classes == Label.Hope.value, 1.0, -1.0)
