# -*- coding: utf-8 -*-
"""
软间隔 SVM（对偶问题 + SMO）

对偶问题:
    max  Σ α_i - 1/2 ΣΣ α_i α_j ŷ_i ŷ_j k(x_i, x_j)
    s.t. 0 <= α_i <= C,  Σ α_i ŷ_i = 0

每步选取最大 KKT 违反对 (i, j) 做两变量解析更新，
最大违反量 <= tol 时停止；核矩阵在训练开始时一次算好

作者: AI Assistant
"""

import logging
from dataclasses import asdict, dataclass, field, replace
from typing import Optional, Tuple

import numpy as np
from scipy import sparse

from hope_detector.errors import ConfigError, ConvergenceError, DataError
from hope_detector.features.sparse import to_csr
from hope_detector.models.base import TrainingInfo, prepare_training_data, signed_targets

logger = logging.getLogger(__name__)

KERNEL_KINDS = ("linear", "rbf")

# 二次项系数非正时使用的下限
TAU = 1e-12


@dataclass(frozen=True)
class KernelConfig:
    """
    核函数配置

    linear: k(x, z) = x·z
    rbf:    k(x, z) = exp(-gamma * ||x - z||^2)，gamma 为 None 时训练时按数据自动确定
    """
    kind: str = "rbf"
    gamma: Optional[float] = None

    def __post_init__(self):
        if self.kind not in KERNEL_KINDS:
            raise ConfigError(f"未知的核函数: {self.kind!r}（可选: {', '.join(KERNEL_KINDS)}）")
        if self.gamma is not None:
            if not (isinstance(self.gamma, (int, float)) and np.isfinite(self.gamma) and self.gamma > 0):
                raise ConfigError(f"gamma 必须为正数: {self.gamma!r}")
            object.__setattr__(self, "gamma", float(self.gamma))
        if self.kind == "linear" and self.gamma is not None:
            object.__setattr__(self, "gamma", None)

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True, eq=False)
class SvmModel:
    """
    训练好的核 SVM

    属性:
        kernel: 已确定 gamma 的 KernelConfig
        dual_coef: 每个支持向量的 α_i·ŷ_i
        support_vectors: 支持向量（CSR，每行一个）
        bias: 偏置 b，决策值 f(x) = Σ α_i ŷ_i k(x_i, x) + b
        C: 惩罚参数
        support_indices: 支持向量在训练集中的下标
        info: 训练信息，不参与相等比较
    """
    kernel: KernelConfig
    dual_coef: np.ndarray
    support_vectors: sparse.csr_matrix
    bias: float
    C: float = 1.0
    support_indices: Tuple[int, ...] = ()
    info: Optional[TrainingInfo] = field(default=None, repr=False)

    def __post_init__(self):
        coef = np.array(self.dual_coef, dtype=np.float64).reshape(-1)
        vectors = to_csr(self.support_vectors)
        if vectors.shape[0] != coef.size:
            raise DataError(f"支持向量数 {vectors.shape[0]} 与对偶系数数 {coef.size} 不一致")
        if not (self.C > 0 and np.isfinite(self.C)):
            raise DataError(f"惩罚参数 C 必须为正: {self.C}")
        if not (np.all(np.isfinite(coef)) and np.isfinite(self.bias)):
            raise DataError("SVM 参数包含非有限值")
        if np.any(coef == 0.0) or np.any(np.abs(coef) > self.C):
            raise DataError("对偶系数必须满足 0 < α_i <= C")
        if self.kernel.kind == "rbf" and self.kernel.gamma is None:
            raise DataError("训练好的 RBF 模型必须记录 gamma")
        indices = tuple(int(i) for i in self.support_indices)
        if indices and len(indices) != coef.size:
            raise DataError("支持向量下标数与对偶系数数不一致")
        coef.setflags(write=False)
        object.__setattr__(self, "dual_coef", coef)
        object.__setattr__(self, "support_vectors", vectors)
        object.__setattr__(self, "bias", float(self.bias))
        object.__setattr__(self, "C", float(self.C))
        object.__setattr__(self, "support_indices", indices)

    @property
    def dim(self):
        return self.support_vectors.shape[1]

    @property
    def alphas(self):
        return np.abs(self.dual_coef)

    def __eq__(self, other):
        if not isinstance(other, SvmModel):
            return NotImplemented
        return (
            self.kernel == other.kernel
            and self.bias == other.bias
            and self.C == other.C
            and self.support_indices == other.support_indices
            and np.array_equal(self.dual_coef, other.dual_coef)
            and self.support_vectors.shape == other.support_vectors.shape
            and (self.support_vectors != other.support_vectors).nnz == 0
        )

    __hash__ = None


# ==================== 核函数 ====================

def kernel_matrix(A, B, kernel):
    """
    计算核矩阵 K[i, j] = k(A_i, B_j)

    Args:
        A, B: CSR 矩阵，列数相同
        kernel: KernelConfig（rbf 时 gamma 必须已确定）

    Returns:
        np.ndarray: 形状 (A 行数, B 行数)
    """
    A = to_csr(A)
    B = to_csr(B)
    gram = np.asarray((A @ B.T).todense())
    if kernel.kind == "linear":
        return gram
    sq_a = np.asarray(A.multiply(A).sum(axis=1)).reshape(-1, 1)
    sq_b = np.asarray(B.multiply(B).sum(axis=1)).reshape(1, -1)
    distances = np.maximum(sq_a + sq_b - 2.0 * gram, 0.0)
    return np.exp(-kernel.gamma * distances)


def default_gamma(X):
    """
    RBF 默认 gamma = 1 / (V * v̄)，v̄ 为各特征方差的平均值；v̄ 为 0 时取 1.0
    """
    X = to_csr(X)
    n_docs, dim = X.shape
    if n_docs == 0 or dim == 0:
        return 1.0
    mean = np.asarray(X.mean(axis=0)).reshape(-1)
    mean_sq = np.asarray(X.multiply(X).mean(axis=0)).reshape(-1)
    variance = float(np.mean(np.maximum(mean_sq - mean ** 2, 0.0)))
    if variance <= 0.0:
        return 1.0
    return 1.0 / (dim * variance)


# ==================== SMO ====================

def _select_working_pair(alpha, grad, y, C):
    """
    最大违反对选择

    Returns:
        Tuple[int, int, float]: (i, j, 最大违反量)；没有可选下标时违反量为 0
    """
    score = -y * grad
    up = ((y > 0) & (alpha < C)) | ((y < 0) & (alpha > 0))
    low = ((y > 0) & (alpha > 0)) | ((y < 0) & (alpha < C))
    if not up.any() or not low.any():
        return -1, -1, 0.0
    up_scores = np.where(up, score, -np.inf)
    low_scores = np.where(low, score, np.inf)
    i = int(np.argmax(up_scores))
    j = int(np.argmin(low_scores))
    return i, j, float(up_scores[i] - low_scores[j])


def _update_pair(i, j, alpha, grad, y, Q, C):
    """两变量解析更新并裁剪到 [0, C]，返回新的 (α_i, α_j)"""
    old_i, old_j = alpha[i], alpha[j]
    if y[i] != y[j]:
        quad = Q[i, i] + Q[j, j] + 2.0 * Q[i, j]
        delta = (-grad[i] - grad[j]) / max(quad, TAU)
        diff = old_i - old_j
        new_i, new_j = old_i + delta, old_j + delta
        if diff > 0:
            if new_j < 0:
                new_j, new_i = 0.0, diff
        elif new_i < 0:
            new_i, new_j = 0.0, -diff
        if diff > 0:
            if new_i > C:
                new_i, new_j = C, C - diff
        elif new_j > C:
            new_j, new_i = C, C + diff
    else:
        quad = Q[i, i] + Q[j, j] - 2.0 * Q[i, j]
        delta = (grad[i] - grad[j]) / max(quad, TAU)
        total = old_i + old_j
        new_i, new_j = old_i - delta, old_j + delta
        if total > C:
            if new_i > C:
                new_i, new_j = C, total - C
        elif new_j < 0:
            new_j, new_i = 0.0, total
        if total > C:
            if new_j > C:
                new_j, new_i = C, total - C
        elif new_i < 0:
            new_i, new_j = 0.0, total
    return min(max(new_i, 0.0), C), min(max(new_j, 0.0), C)


def _bias(alpha, grad, y, C):
    """偏置: 自由支持向量上 -ŷ·G 的平均；没有自由支持向量时取可行区间中点"""
    y_grad = y * grad
    free = (alpha > 0) & (alpha < C)
    if free.any():
        return float(-np.mean(y_grad[free]))
    at_upper = alpha >= C
    ub_mask = (at_upper & (y < 0)) | (~at_upper & (y > 0))
    lb_mask = (at_upper & (y > 0)) | (~at_upper & (y < 0))
    ub = y_grad[ub_mask].min() if ub_mask.any() else np.inf
    lb = y_grad[lb_mask].max() if lb_mask.any() else -np.inf
    if not np.isfinite(ub) or not np.isfinite(lb):
        return float(-(ub if np.isfinite(ub) else lb))
    return float(-(ub + lb) / 2.0)


def _duality_gap(alpha, grad, y, C, bias):
    """原始目标减对偶目标（Qα = G + 1）"""
    q_alpha = grad + 1.0
    quadratic = float(np.dot(alpha, q_alpha))
    margins = q_alpha + y * bias
    hinge = np.maximum(0.0, 1.0 - margins).sum()
    primal = 0.5 * quadratic + C * hinge
    dual = alpha.sum() - 0.5 * quadratic
    return float(primal - dual)


def train_svm(X, y, C=1.0, kernel=None, tol=1e-3, max_iter=None):
    """
    用 SMO 训练软间隔 SVM

    Args:
        X: 特征矩阵
        y: Label 序列
        C: 惩罚参数，默认 1.0
        kernel: KernelConfig，默认 RBF 且 gamma 按数据确定
        tol: KKT 违反量阈值
        max_iter: 迭代上限，默认 max(100000, 100 * 样本数)

    Returns:
        SvmModel: 只保留 α_i > 0 的支持向量

    Raises:
        SingleClassError: 只有一个类别
        ConvergenceError: 达到迭代上限仍未收敛，携带对偶间隙和 KKT 违反量
    """
    if not (C > 0 and np.isfinite(C)):
        raise DataError(f"惩罚参数 C 必须为正: {C}")
    X, classes = prepare_training_data(X, y)
    y_signed = signed_targets(classes)
    n_docs = X.shape[0]
    kernel = kernel or KernelConfig()
    if kernel.kind == "rbf" and kernel.gamma is None:
        kernel = replace(kernel, gamma=default_gamma(X))
    if max_iter is None:
        max_iter = max(100000, 100 * n_docs)

    K = kernel_matrix(X, X, kernel)
    Q = (y_signed[:, None] * y_signed[None, :]) * K
    alpha = np.zeros(n_docs)
    grad = -np.ones(n_docs)

    iterations = 0
    while True:
        i, j, gap = _select_working_pair(alpha, grad, y_signed, C)
        if gap <= tol:
            break
        if iterations >= max_iter:
            bias = _bias(alpha, grad, y_signed, C)
            duality_gap = _duality_gap(alpha, grad, y_signed, C, bias)
            raise ConvergenceError(
                f"SMO 在 {max_iter} 次迭代内未收敛（KKT 违反量 {gap:.3g}, 对偶间隙 {duality_gap:.3g}）",
                duality_gap=duality_gap,
                kkt_gap=gap,
            )
        new_i, new_j = _update_pair(i, j, alpha, grad, y_signed, Q, C)
        delta_i, delta_j = new_i - alpha[i], new_j - alpha[j]
        alpha[i], alpha[j] = new_i, new_j
        grad += Q[:, i] * delta_i + Q[:, j] * delta_j
        iterations += 1

    alpha = np.clip(alpha, 0.0, C)
    bias = _bias(alpha, grad, y_signed, C)
    support = np.flatnonzero(alpha > 0)
    logger.info(
        "SMO 收敛: %d 次迭代, %d 个支持向量, 核函数 %s", iterations, support.size, kernel.kind
    )
    info = TrainingInfo(iterations=iterations, converged=True, final_gap=gap)
    return SvmModel(
        kernel=kernel,
        dual_coef=alpha[support] * y_signed[support],
        support_vectors=X[support],
        bias=bias,
        C=C,
        support_indices=tuple(int(k) for k in support),
        info=info,
    )
