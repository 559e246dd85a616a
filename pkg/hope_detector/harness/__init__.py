# -*- coding: utf-8 -*-
"""
实验流程模块

子模块:
    pipeline: 单个流水线的拟合、预测和预测文件
    experiment: 实验配置、网格训练与开发集选模 (ExperimentConfig, LeaderboardRow)
    leaderboard: 排行榜格式化与实验产物
    synthetic: 端到端检查用的合成语料

作者: AI Assistant
"""

from hope_detector.harness.experiment import (
    ExperimentConfig,
    ExperimentResult,
    LeaderboardRow,
    run_experiment,
    select_best,
    sort_leaderboard,
)
from hope_detector.harness.leaderboard import format_leaderboard, write_artifacts
from hope_detector.harness.pipeline import (
    bundle_from_parts,
    check_compatible,
    evaluate_bundle,
    fit_pipeline,
    format_predictions,
    predict_dataset,
    predict_file,
)
from hope_detector.harness.synthetic import generate_synthetic_corpus

__all__ = [
    "ExperimentConfig",
    "ExperimentResult",
    "LeaderboardRow",
    "bundle_from_parts",
    "check_compatible",
    "evaluate_bundle",
    "fit_pipeline",
    "format_leaderboard",
    "format_predictions",
    "generate_synthetic_corpus",
    "predict_dataset",
    "predict_file",
    "run_experiment",
    "select_best",
    "sort_leaderboard",
    "write_artifacts",
]
