# -*- coding: utf-8 -*-
"""
Hope Detector

希望言论（hope speech）二分类工具包：文本清洗、词 n-gram 特征、
传统分类器（朴素贝叶斯、逻辑回归、线性/RBF 核 SVM）、评估指标与实验流程

子包:
    corpus: 数据集加载、统计与划分检查
    preprocess: 文本清洗流水线
    features: n-gram 词表与计数 / TF-IDF 向量化
    models: 分类器与优化器
    metrics: 评估指标与报告
    harness: 实验网格、开发集选模、预测
    persist: 模型包序列化
    database: 实验运行历史

作者: AI Assistant
"""

__version__ = "1.0.0"
