# -*- coding: utf-8 -*-
"""
稀疏向量

单个文档的特征用 SparseVector 表示（有序列下标 + 对应取值），
训练时按行堆叠成 scipy.sparse 的 CSR 矩阵

作者: AI Assistant
"""

from dataclasses import dataclass

import numpy as np
from scipy import sparse

from hope_detector.errors import DimensionError


@dataclass(frozen=True, eq=False)
class SparseVector:
    """
    稀疏向量

    不变量:
        - indices 严格递增且都在 [0, dim) 内
        - values 中没有 0
        - 两个数组长度相同
    """
    indices: np.ndarray
    values: np.ndarray
    dim: int

    def __post_init__(self):
        indices = np.array(self.indices, dtype=np.int64).reshape(-1)
        values = np.array(self.values, dtype=np.float64).reshape(-1)
        if indices.shape != values.shape:
            raise ValueError("indices 与 values 长度不一致")
        if indices.size:
            if np.any(np.diff(indices) <= 0):
                raise ValueError("indices 必须严格递增")
            if indices[0] < 0 or indices[-1] >= self.dim:
                raise DimensionError(f"列下标超出维度 {self.dim}")
        if np.any(values == 0.0):
            raise ValueError("不能存储 0 值")
        indices.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "dim", int(self.dim))

    def __eq__(self, other):
        if not isinstance(other, SparseVector):
            return NotImplemented
        return (
            self.dim == other.dim
            and np.array_equal(self.indices, other.indices)
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self):
        return hash((self.dim, self.indices.tobytes(), self.values.tobytes()))

    @property
    def nnz(self):
        return int(self.indices.size)

    def to_dense(self):
        dense = np.zeros(self.dim)
        dense[self.indices] = self.values
        return dense

    def norm(self):
        return float(np.sqrt(np.dot(self.values, self.values)))

    @classmethod
    def zeros(cls, dim):
        return cls(np.empty(0, dtype=np.int64), np.empty(0), dim)

    @classmethod
    def from_dense(cls, values):
        """从稠密数组构造，丢弃 0"""
        values = np.asarray(values, dtype=np.float64).reshape(-1)
        nonzero = np.flatnonzero(values)
        return cls(nonzero, values[nonzero], values.size)

    @classmethod
    def from_mapping(cls, mapping, dim):
        """从 {列下标: 取值} 构造，丢弃 0"""
        items = sorted((i, v) for i, v in mapping.items() if v != 0)
        if not items:
            return cls.zeros(dim)
        indices, values = zip(*items)
        return cls(np.array(indices), np.array(values, dtype=np.float64), dim)


def to_csr(rows, dim=None):
    """
    把输入统一成 CSR 矩阵

    Args:
        rows: CSR / 任意 scipy 稀疏矩阵 / 二维数组 / SparseVector 序列
        dim: SparseVector 序列为空时使用的列数

    Returns:
        scipy.sparse.csr_matrix: float64 矩阵
    """
    if sparse.issparse(rows):
        return sparse.csr_matrix(rows, dtype=np.float64)
    if isinstance(rows, np.ndarray):
        return sparse.csr_matrix(np.atleast_2d(rows).astype(np.float64))

    rows = list(rows)
    if rows and not isinstance(rows[0], SparseVector):
        return sparse.csr_matrix(np.atleast_2d(np.asarray(rows, dtype=np.float64)))

    if rows:
        dims = {row.dim for row in rows}
        if len(dims) != 1:
            raise DimensionError(f"向量维度不一致: {sorted(dims)}")
        dim = dims.pop()
    elif dim is None:
        raise DimensionError("空向量序列需要指定维度")

    indptr = np.zeros(len(rows) + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([row.nnz for row in rows])
    indices = np.concatenate([row.indices for row in rows]) if rows else np.empty(0, dtype=np.int64)
    data = np.concatenate([row.values for row in rows]) if rows else np.empty(0)
    return sparse.csr_matrix((data, indices, indptr), shape=(len(rows), dim))


def row_vector(matrix, i):
    """取 CSR 矩阵的第 i 行为 SparseVector"""
    start, end = matrix.indptr[i], matrix.indptr[i + 1]
    indices = matrix.indices[start:end]
    values = matrix.data[start:end]
    order = np.argsort(indices, kind="stable")
    keep = values[order] != 0
    return SparseVector(indices[order][keep], values[order][keep], matrix.shape[1])


def as_vector(x, dim):
    """
    把单个样本统一成长度为 dim 的 SparseVector

    Raises:
        DimensionError: 维度不匹配
    """
    if isinstance(x, SparseVector):
        vector = x
    elif sparse.issparse(x):
        vector = row_vector(sparse.csr_matrix(x), 0)
    else:
        vector = SparseVector.from_dense(x)
    if vector.dim != dim:
        raise DimensionError(f"向量维度 {vector.dim} 与模型维度 {dim} 不一致")
    return vector
