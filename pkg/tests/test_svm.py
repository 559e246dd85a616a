# -*- coding: utf-8 -*-
"""
SVM 单元测试

测试 models/svm.py 的核函数、SMO 求解和线性核折叠
"""

import numpy as np
import pytest

from hope_detector.corpus.models import Label
from hope_detector.errors import ConfigError, ConvergenceError, SingleClassError
from hope_detector.models import (
    KernelConfig,
    collapse_linear,
    decision_values,
    default_gamma,
    kernel_matrix,
    predict_labels,
    train_model,
    train_svm,
)

LINEAR = KernelConfig("linear")

XOR_X = np.array([[0.0, 0.0], [1.0, 1.0], [0.0, 1.0], [1.0, 0.0]])
XOR_Y = [Label.Hope, Label.Hope, Label.NotHope, Label.NotHope]


def random_instance(rng, n_docs=12, dim=3):
    X = rng.normal(size=(n_docs, dim))
    y = [Label.Hope if i % 2 == 0 else Label.NotHope for i in range(n_docs)]
    rng.shuffle(y)
    return X, y


class TestKernel:
    """核函数测试类"""

    def test_linear_kernel(self):
        """测试线性核为内积"""
        A = np.array([[1.0, 2.0]])
        B = np.array([[3.0, 4.0], [0.0, 1.0]])
        assert kernel_matrix(A, B, LINEAR).tolist() == [[11.0, 2.0]]

    def test_rbf_kernel(self):
        """测试 RBF 核"""
        A = np.array([[0.0, 0.0]])
        B = np.array([[1.0, 1.0], [0.0, 0.0]])
        K = kernel_matrix(A, B, KernelConfig("rbf", gamma=0.5))
        assert K[0].tolist() == pytest.approx([np.exp(-1.0), 1.0], abs=1e-12)

    def test_default_gamma(self):
        """测试默认 gamma = 1 / (V * 平均方差)"""
        X = np.array([[0.0, 2.0], [2.0, 2.0]])
        # 方差分别为 1 和 0，平均 0.5
        assert default_gamma(X) == pytest.approx(1.0)
        assert default_gamma(np.ones((3, 2))) == 1.0

    @pytest.mark.parametrize("kwargs", [{"kind": "poly"}, {"kind": "rbf", "gamma": 0.0}, {"kind": "rbf", "gamma": -1.0}])
    def test_invalid_kernel(self, kwargs):
        """测试非法核配置"""
        with pytest.raises(ConfigError):
            KernelConfig(**kwargs)


class TestTrainSvm:
    """SMO 训练测试类"""

    def test_symmetric_two_points(self):
        """测试对称两点问题的闭式解"""
        X = np.array([[1.0, 0.0], [-1.0, 0.0]])

        model = train_svm(X, [Label.Hope, Label.NotHope], C=1.0, kernel=LINEAR)
        linear = collapse_linear(model)

        assert model.alphas.tolist() == pytest.approx([0.5, 0.5], abs=1e-6)
        assert model.bias == pytest.approx(0.0, abs=1e-6)
        assert linear.weights.tolist() == pytest.approx([1.0, 0.0], abs=1e-6)

    @pytest.mark.parametrize("kernel", [LINEAR, KernelConfig("rbf", gamma=0.5)])
    def test_kkt_conditions(self, kernel):
        """测试随机问题上的 KKT 条件在 tol 内成立"""
        rng = np.random.default_rng(17)
        tol = 1e-3
        for _ in range(20):
            X, y = random_instance(rng)
            C = 1.0
            model = train_svm(X, y, C=C, kernel=kernel, tol=tol)

            alpha = np.zeros(len(y))
            alpha[list(model.support_indices)] = model.alphas
            signs = np.array([label.sign for label in y], dtype=float)
            margins = signs * decision_values(model, X)

            assert np.all(alpha >= 0.0) and np.all(alpha <= C)
            assert abs(np.dot(alpha, signs)) < 1e-9
            zero = alpha == 0.0
            upper = alpha >= C
            free = ~zero & ~upper
            assert np.all(margins[zero] >= 1.0 - tol)
            assert np.all(np.abs(margins[free] - 1.0) <= tol)
            assert np.all(margins[upper] <= 1.0 + tol)

    def test_collapsed_decision_matches_dual(self):
        """测试线性核折叠后的决策值与对偶展开一致"""
        rng = np.random.default_rng(23)
        X, y = random_instance(rng, n_docs=20, dim=5)
        model = train_svm(X, y, C=0.5, kernel=LINEAR)
        queries = rng.normal(size=(10, 5))

        dual = decision_values(model, queries)
        primal = decision_values(collapse_linear(model), queries)

        assert np.allclose(dual, primal, atol=1e-9)

    def test_rbf_solves_xor(self):
        """测试 RBF 核能分开 XOR"""
        model = train_svm(XOR_X, XOR_Y, C=10.0, kernel=KernelConfig("rbf", gamma=1.0))
        assert predict_labels(model, XOR_X) == XOR_Y

    def test_default_kernel_records_gamma(self):
        """测试默认 RBF 训练后记录 gamma"""
        model = train_svm(XOR_X, XOR_Y)
        assert model.kernel.kind == "rbf"
        assert model.kernel.gamma == pytest.approx(default_gamma(XOR_X))

    def test_iteration_limit(self):
        """测试迭代上限内未收敛时报错并携带间隙"""
        with pytest.raises(ConvergenceError) as exc_info:
            train_svm(XOR_X, XOR_Y, C=10.0, kernel=KernelConfig("rbf", gamma=1.0), max_iter=1)
        assert exc_info.value.kkt_gap > 1e-3
        assert exc_info.value.duality_gap is not None

    def test_single_class(self):
        """测试只有一个类别"""
        with pytest.raises(SingleClassError):
            train_svm(XOR_X, [Label.Hope] * 4, kernel=LINEAR)

    def test_deterministic(self):
        """测试相同输入得到相同模型"""
        rng = np.random.default_rng(29)
        X, y = random_instance(rng)
        assert train_svm(X, y, kernel=LINEAR) == train_svm(X, y, kernel=LINEAR)


class TestTrainModel:
    """按名称训练测试类"""

    def test_svm_linear_is_collapsed(self):
        """测试 svm-linear 得到原始形式的线性模型"""
        model = train_model("svm-linear", np.array([[1.0, 0.0], [-1.0, 0.0]]), [Label.Hope, Label.NotHope])
        assert model.kind == "svm-linear"

    def test_svm_rbf_accepts_gamma(self):
        """测试 svm-rbf 的 gamma 超参数"""
        model = train_model("svm-rbf", XOR_X, XOR_Y, {"C": 10.0, "gamma": 1.0})
        assert model.kernel.gamma == 1.0

    def test_unknown_hyperparameter(self):
        """测试未知超参数"""
        with pytest.raises(ConfigError):
            train_model("nb", XOR_X, XOR_Y, {"C": 1.0})

    def test_unknown_model(self):
        """测试未知模型"""
        with pytest.raises(ConfigError):
            train_model("random-forest", XOR_X, XOR_Y)
