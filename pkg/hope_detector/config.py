# -*- coding: utf-8 -*-
"""
配置文件
定义项目路径、支持的数据格式、资源标识、日志等配置

环境变量只影响产物存放位置、日志和运行历史，不影响任何数值结果；
命令行参数总是优先于环境变量。

作者: AI Assistant
"""

import logging
import os
import sys
from pathlib import Path

# 从 .env 文件加载环境变量
# 必须在使用 os.getenv 之前调用
from dotenv import load_dotenv
load_dotenv()

# ==================== 项目路径配置 ====================

# 项目根目录（config.py 在 hope_detector 包中）
_config_dir = Path(__file__).parent
# 判断是开发模式还是已安装的包
if (_config_dir.parent / "pyproject.toml").exists():
    # 开发模式：项目根目录是 hope_detector 的父目录
    BASE_DIR = _config_dir.parent
else:
    # 已安装的包：使用包目录
    BASE_DIR = _config_dir

# 内置资源目录（停用词表、词形还原表）
RESOURCE_DIR = _config_dir / "preprocess" / "data"


def _resolve(path_value):
    """相对路径按 BASE_DIR 解析，绝对路径原样返回"""
    path = Path(path_value)
    return path if path.is_absolute() else BASE_DIR / path


# 实验产物目录（排行榜、模型包、预测文件）
# 可通过环境变量 HOPE_OUTPUT_DIR 自定义，默认为项目根目录下的 runs 文件夹
OUTPUT_DIR = _resolve(os.getenv("HOPE_OUTPUT_DIR", "runs"))

# 实验运行历史数据库（SQLite）
# 未设置 HOPE_HISTORY_DB 时不记录运行历史
_history_db = os.getenv("HOPE_HISTORY_DB", "")
HISTORY_DB_PATH = _resolve(_history_db) if _history_db else None

# ==================== 数据格式 ====================

# 支持的数据集文件格式
# csv:   逗号分隔，首行为表头
# tsv:   制表符分隔，首行为表头
# jsonl: 每行一个 JSON 对象，包含 "text" 和可选的 "label"
SUPPORTED_FORMATS = ("csv", "tsv", "jsonl")

# ==================== 预处理资源 ====================

# 默认停用词表和词形还原表的资源标识（随包发布的数据文件）
DEFAULT_STOPWORD_LIST = "en-basic-v1"
DEFAULT_LEMMA_TABLE = "en-basic-v1"

# ==================== 模型包格式 ====================

# 当前写出的模型包格式版本，以及可以读取的版本范围
BUNDLE_FORMAT_VERSION = 1
SUPPORTED_BUNDLE_VERSIONS = (1,)

# ==================== 运行配置 ====================

# 实验网格的默认并行数
DEFAULT_JOBS = int(os.getenv("HOPE_JOBS", "1"))

# 日志级别（DEBUG / INFO / WARNING / ERROR）
LOG_LEVEL = os.getenv("HOPE_LOG_LEVEL", "WARNING").upper()

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def setup_logging(level=None):
    """
    配置根日志器

    只安装一个输出到 stderr 的处理器，stdout 留给命令行输出

    Args:
        level: 日志级别名称，默认使用 LOG_LEVEL
    """
    level_name = (level or LOG_LEVEL).upper()
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(getattr(logging, level_name, logging.WARNING))
