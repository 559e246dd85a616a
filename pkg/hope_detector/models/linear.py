# -*- coding: utf-8 -*-
"""
线性模型与 L2 正则逻辑回归

目标函数（Hope → +1，偏置不参与正则）:
    f(w, b) = 1/2 ||w||^2 + C * Σ ln(1 + exp(-ŷ_i (w·x_i + b)))

使用确定性的 L-BFGS（两循环递推 + Armijo 回溯线搜索）从 w=0, b=0 开始最小化，
梯度无穷范数 <= tol 时认为收敛

作者: AI Assistant
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.special import expit

from hope_detector.errors import DataError
from hope_detector.models.base import TrainingInfo, prepare_training_data, signed_targets

logger = logging.getLogger(__name__)

# 线性模型的来源
LINEAR_KINDS = ("logistic", "svm-linear")

# ==================== L-BFGS 参数 ====================

LBFGS_MEMORY = 10
ARMIJO_C1 = 1e-4
BACKTRACK_FACTOR = 0.5
MAX_BACKTRACKS = 60


@dataclass(frozen=True, eq=False)
class LinearModel:
    """
    线性模型 w·x + b

    属性:
        weights: 长度 V 的权重向量
        bias: 偏置
        C: 训练时的正则强度
        kind: logistic 或 svm-linear（由线性核 SVM 折叠得到）
        info: 训练信息，不参与相等比较
    """
    weights: np.ndarray
    bias: float
    C: float = 1.0
    kind: str = "logistic"
    info: Optional[TrainingInfo] = field(default=None, repr=False)

    def __post_init__(self):
        weights = np.array(self.weights, dtype=np.float64).reshape(-1)
        if self.kind not in LINEAR_KINDS:
            raise DataError(f"未知的线性模型类型: {self.kind!r}")
        if not (np.all(np.isfinite(weights)) and np.isfinite(self.bias)):
            raise DataError("线性模型参数包含非有限值")
        if not (self.C > 0 and np.isfinite(self.C)):
            raise DataError(f"正则强度 C 必须为正: {self.C}")
        weights.setflags(write=False)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "bias", float(self.bias))
        object.__setattr__(self, "C", float(self.C))

    @property
    def dim(self):
        return self.weights.size

    def __eq__(self, other):
        if not isinstance(other, LinearModel):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.bias == other.bias
            and self.C == other.C
            and np.array_equal(self.weights, other.weights)
        )

    __hash__ = None


def logistic_objective(w, b, X, y_signed, C):
    """
    逻辑回归目标函数及其梯度

    Args:
        w: 权重向量
        b: 偏置
        X: CSR 特征矩阵
        y_signed: ±1 标签数组
        C: 正则强度

    Returns:
        Tuple[float, np.ndarray, float]: (目标值, 对 w 的梯度, 对 b 的梯度)
    """
    margins = y_signed * (X @ w + b)
    loss = np.logaddexp(0.0, -margins).sum()
    # d loss / d margin = -sigmoid(-margin)
    coef = -C * y_signed * expit(-margins)
    value = 0.5 * np.dot(w, w) + C * loss
    grad_w = w + X.T @ coef
    grad_b = coef.sum()
    return float(value), np.asarray(grad_w).reshape(-1), float(grad_b)


def _two_loop(grad, history):
    """L-BFGS 两循环递推，返回 H·grad 的近似"""
    q = grad.copy()
    alphas = []
    for s, y, rho in reversed(history):
        a = rho * np.dot(s, q)
        q -= a * y
        alphas.append(a)
    if history:
        s, y, _ = history[-1]
        q *= np.dot(s, y) / np.dot(y, y)
    for (s, y, rho), a in zip(history, reversed(alphas)):
        beta = rho * np.dot(y, q)
        q += (a - beta) * s
    return q


def train_logreg(X, y, C=1.0, tol=1e-6, max_iter=1000):
    """
    训练 L2 正则逻辑回归

    Args:
        X: 特征矩阵
        y: Label 序列
        C: 正则强度，默认 1.0
        tol: 梯度无穷范数阈值
        max_iter: 最大迭代次数；达到上限不报错，在 info.converged 中反映

    Returns:
        LinearModel: kind="logistic"，info 中记录迭代次数和目标函数轨迹

    Raises:
        SingleClassError: 只有一个类别
    """
    if not C > 0:
        raise DataError(f"正则强度 C 必须为正: {C}")
    X, classes = prepare_training_data(X, y)
    y_signed = signed_targets(classes)
    dim = X.shape[1]

    def fun(theta):
        value, grad_w, grad_b = logistic_objective(theta[:dim], theta[dim], X, y_signed, C)
        return value, np.append(grad_w, grad_b)

    theta = np.zeros(dim + 1)
    value, grad = fun(theta)
    trace = [value]
    history = deque(maxlen=LBFGS_MEMORY)
    iterations = 0

    while iterations < max_iter and np.max(np.abs(grad)) > tol:
        direction = -_two_loop(grad, history)
        slope = np.dot(grad, direction)
        if slope >= 0:
            history.clear()
            direction = -grad
            slope = -np.dot(grad, grad)

        step = 1.0 if history else min(1.0, 1.0 / np.linalg.norm(grad))
        for _ in range(MAX_BACKTRACKS):
            candidate = theta + step * direction
            new_value, new_grad = fun(candidate)
            if new_value <= value + ARMIJO_C1 * step * slope:
                break
            # 数值精度极限附近 Armijo 条件无法满足时，接受不增加目标值且梯度变小的步
            if new_value <= value and np.max(np.abs(new_grad)) < np.max(np.abs(grad)):
                break
            step *= BACKTRACK_FACTOR
        else:
            logger.warning("逻辑回归线搜索失败，停止于第 %d 次迭代", iterations)
            break

        s = candidate - theta
        y_diff = new_grad - grad
        curvature = np.dot(s, y_diff)
        if curvature > 1e-12:
            history.append((s, y_diff, 1.0 / curvature))

        theta, value, grad = candidate, new_value, new_grad
        trace.append(value)
        iterations += 1

    gap = float(np.max(np.abs(grad)))
    converged = gap <= tol
    if converged:
        logger.info("逻辑回归收敛: %d 次迭代, 目标值 %.6g", iterations, value)
    else:
        logger.warning("逻辑回归未收敛: %d 次迭代后梯度无穷范数 %.3g > %g", iterations, gap, tol)

    info = TrainingInfo(
        iterations=iterations,
        converged=converged,
        objective_trace=tuple(trace),
        final_gap=gap,
    )
    return LinearModel(weights=theta[:dim], bias=theta[dim], C=C, kind="logistic", info=info)


def collapse_linear(model):
    """
    把线性核 SvmModel 折叠为原始形式 w = Σ α_i ŷ_i x_i

    Args:
        model: 线性核 SvmModel

    Returns:
        LinearModel: kind="svm-linear"，决策值与对偶展开一致

    Raises:
        DataError: 不是线性核
    """
    if model.kernel.kind != "linear":
        raise DataError(f"只有线性核 SVM 可以折叠为原始形式: {model.kernel.kind}")
    weights = np.asarray(model.support_vectors.T @ model.dual_coef).reshape(-1)
    return LinearModel(weights=weights, bias=model.bias, C=model.C, kind="svm-linear", info=model.info)
