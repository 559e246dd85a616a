# -*- coding: utf-8 -*-
"""
hope_detector 测试包

按子包划分: 语料、预处理、特征、模型、指标、模型包、实验流程、运行历史和命令行
"""
