# -*- coding: utf-8 -*-
"""
数据库操作模块

记录实验运行和排行榜，并提供历史查询

主要功能:
- 记录一次实验的配置、排行榜和最佳模型
- 查询最近的运行
- 查询某次运行的排行榜
- 跨运行的最佳结果

作者: AI Assistant
"""

import json
import logging

from hope_detector.database.models import ExperimentRun, RunResult, get_session

logger = logging.getLogger(__name__)


def _macro_f1(report):
    return report.macro_f1 if report is not None else None


# ==================== 记录 ====================

def record_experiment(result, config=None):
    """
    记录一次实验运行

    Args:
        result: ExperimentResult
        config: ExperimentConfig，默认使用 result.config

    Returns:
        int: 新记录的运行ID
    """
    config = config or result.config
    rows = list(result)
    successful = [row for row in rows if row.ok]
    best = successful[0] if successful else None

    session = get_session()
    try:
        run = ExperimentRun(
            train_path=str(config.train_path),
            dev_path=str(config.dev_path),
            test_path=None if config.test_path is None else str(config.test_path),
            config_json=json.dumps(config.to_dict(), sort_keys=True),
            seed=config.seed,
            top_k=config.top_k,
            n_rows=len(rows),
            n_failed=len(rows) - len(successful),
            best_model=best.model if best else None,
            best_vectorizer=best.vectorizer if best else None,
            best_dev_macro_f1=_macro_f1(best.dev_report) if best else None,
            best_test_macro_f1=_macro_f1(best.test_report) if best else None,
        )
        session.add(run)
        # 先 flush 拿到自增ID
        session.flush()

        for rank, row in enumerate(rows, start=1):
            dev = row.dev_report
            session.add(RunResult(
                run_id=run.id,
                rank=rank,
                model=row.model,
                vectorizer=row.vectorizer,
                dev_macro_precision=dev.macro_precision if dev else None,
                dev_macro_recall=dev.macro_recall if dev else None,
                dev_macro_f1=dev.macro_f1 if dev else None,
                dev_accuracy=dev.accuracy if dev else None,
                test_macro_f1=_macro_f1(row.test_report),
                train_seconds=row.train_seconds,
                error=row.error,
            ))
        session.commit()
        logger.info("实验运行已记录: #%d (%d 个组合)", run.id, len(rows))
        return run.id
    finally:
        session.close()


# ==================== 查询 ====================

def get_recent_runs(limit=10):
    """
    获取最近的实验运行，最新的在前

    Args:
        limit: 返回数量，默认 10

    Returns:
        List[ExperimentRun]: 运行记录列表
    """
    session = get_session()
    try:
        return session.query(ExperimentRun).order_by(ExperimentRun.id.desc()).limit(limit).all()
    finally:
        session.close()


def get_run_results(run_id):
    """
    获取某次运行的排行榜（按名次）

    Args:
        run_id: 运行ID

    Returns:
        List[RunResult]: 排行榜，运行不存在时为空列表
    """
    session = get_session()
    try:
        return session.query(RunResult).filter_by(run_id=run_id).order_by(RunResult.rank).all()
    finally:
        session.close()


def get_best_results(limit=5):
    """
    跨所有运行按开发集宏 F1 排名的最佳结果

    训练失败的结果不参与排名；分数相同时较早的记录在前

    Args:
        limit: 返回数量，默认 5

    Returns:
        List[RunResult]: 结果列表
    """
    session = get_session()
    try:
        return session.query(RunResult).filter(
            RunResult.dev_macro_f1.isnot(None)
        ).order_by(
            RunResult.dev_macro_f1.desc(),
            RunResult.id
        ).limit(limit).all()
    finally:
        session.close()
