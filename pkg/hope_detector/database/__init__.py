# -*- coding: utf-8 -*-
"""
数据库模块

提供实验运行历史的存储和查询

子模块:
    models: 数据库模型定义 (ExperimentRun, RunResult)
    db: 数据库操作函数

作者: AI Assistant
"""
