# -*- coding: utf-8 -*-
"""
数据库模型定义

使用 SQLAlchemy ORM 定义实验运行历史的表结构
包括实验运行表、排行榜结果表

作者: AI Assistant
"""

from datetime import datetime, timezone
from pathlib import Path

# SQLAlchemy 核心组件
from sqlalchemy import Column, DateTime, Float, Integer, String, Text, create_engine
from sqlalchemy.orm import declarative_base, sessionmaker

from hope_detector import config
from hope_detector.errors import UsageError

# 创建 ORM 基类
# 所有数据库模型类都需要继承此基类
Base = declarative_base()


class ExperimentRun(Base):
    """
    实验运行表

    每次 experiment 运行记录一行，保存配置和最佳模型的摘要
    """
    __tablename__ = "experiment_run"

    # 主键自增ID
    id = Column(Integer, primary_key=True, autoincrement=True)

    # 数据文件路径
    train_path = Column(String(500), nullable=False)
    dev_path = Column(String(500), nullable=False)
    test_path = Column(String(500), nullable=True)

    # 完整的实验配置（JSON 文本）
    config_json = Column(Text, nullable=False)

    seed = Column(Integer, nullable=True)
    top_k = Column(Integer, default=1)

    # 网格大小和失败的组合数
    n_rows = Column(Integer, default=0)
    n_failed = Column(Integer, default=0)

    # 开发集最佳模型
    best_model = Column(String(20), nullable=True)
    best_vectorizer = Column(String(20), nullable=True)
    best_dev_macro_f1 = Column(Float, nullable=True)

    # 最佳模型的测试集宏 F1（测试集无标签时为空）
    best_test_macro_f1 = Column(Float, nullable=True)

    # 记录创建时间
    created_at = Column(DateTime, default=lambda: datetime.now(timezone.utc))

    def __repr__(self):
        """调试用的字符串表示"""
        return f"<ExperimentRun(id={self.id}, best='{self.best_model}+{self.best_vectorizer}')>"


class RunResult(Base):
    """
    排行榜结果表

    一次实验中每个 (模型, 向量化方式) 组合一行，rank 即排行榜名次
    """
    __tablename__ = "run_result"

    # 主键自增ID
    id = Column(Integer, primary_key=True, autoincrement=True)

    # 所属实验运行ID
    run_id = Column(Integer, nullable=False, index=True)

    # 排行榜名次（从 1 开始）
    rank = Column(Integer, nullable=False)

    model = Column(String(20), nullable=False)
    vectorizer = Column(String(20), nullable=False)

    # 开发集指标（训练失败时为空）
    dev_macro_precision = Column(Float, nullable=True)
    dev_macro_recall = Column(Float, nullable=True)
    dev_macro_f1 = Column(Float, nullable=True)
    dev_accuracy = Column(Float, nullable=True)

    # 测试集宏 F1（只有在测试集上评估过的组合才有）
    test_macro_f1 = Column(Float, nullable=True)

    # 训练耗时（秒）
    train_seconds = Column(Float, default=0.0)

    # 训练失败的错误信息
    error = Column(Text, nullable=True)

    def __repr__(self):
        return f"<RunResult(run_id={self.run_id}, rank={self.rank}, model='{self.model}+{self.vectorizer}')>"


# ==================== 数据库连接初始化 ====================

# 数据库引擎和会话工厂在第一次使用时按路径创建
engine = None
SessionLocal = None
_db_path = None


def _resolve_path(path):
    path = path if path is not None else config.HISTORY_DB_PATH
    if path is None:
        raise UsageError("未配置运行历史数据库（设置 HOPE_HISTORY_DB 或使用 --history-db）")
    return Path(path)


def init_db(path=None):
    """
    初始化数据库

    创建引擎和所有表结构（如果不存在）

    Args:
        path: SQLite 文件路径，默认使用 HOPE_HISTORY_DB

    Raises:
        UsageError: 没有配置数据库路径
    """
    global engine, SessionLocal, _db_path

    path = _resolve_path(path)
    if engine is not None and path == _db_path:
        return
    if engine is not None:
        engine.dispose()

    path.parent.mkdir(parents=True, exist_ok=True)
    engine = create_engine(
        f"sqlite:///{path}",
        echo=False  # 调试时可设为 True 查看 SQL 语句
    )
    # 提交后对象仍可读取，查询结果在会话关闭后返回给调用方
    SessionLocal = sessionmaker(bind=engine, expire_on_commit=False)
    _db_path = path
    Base.metadata.create_all(engine)


def get_session(path=None):
    """
    获取数据库会话

    path 为空且已经初始化过时沿用当前数据库

    使用示例:
        session = get_session()
        try:
            # 数据库操作
            session.commit()
        finally:
            session.close()

    Returns:
        Session: SQLAlchemy 会话对象
    """
    if path is not None or SessionLocal is None:
        init_db(path)
    return SessionLocal()
