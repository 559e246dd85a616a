# -*- coding: utf-8 -*-
"""
配置模块单元测试

测试 hope_detector/config.py 中的配置项
"""

import importlib
import logging
import sys
from pathlib import Path

import pytest

from hope_detector import config


class TestConfig:
    """配置模块测试类"""

    def test_base_dir_is_path(self):
        """测试 BASE_DIR 是否为 Path 对象"""
        assert isinstance(config.BASE_DIR, Path)

    def test_resource_dir_contains_bundled_lists(self):
        """测试内置资源目录中有停用词表和词形还原表"""
        assert (config.RESOURCE_DIR / "stopwords_en_basic_v1.txt").is_file()
        assert (config.RESOURCE_DIR / "lemmas_en_basic_v1.txt").is_file()

    def test_supported_formats(self):
        """测试支持的数据格式"""
        assert config.SUPPORTED_FORMATS == ("csv", "tsv", "jsonl")

    def test_bundle_version_is_supported(self):
        """测试当前模型包版本在可读取范围内"""
        assert config.BUNDLE_FORMAT_VERSION in config.SUPPORTED_BUNDLE_VERSIONS

    def test_default_resources(self):
        """测试默认资源标识"""
        assert config.DEFAULT_STOPWORD_LIST == "en-basic-v1"
        assert config.DEFAULT_LEMMA_TABLE == "en-basic-v1"


class TestConfigWithEnv:
    """环境变量配置测试类"""

    @pytest.fixture
    def reload_config(self, monkeypatch):
        """测试结束后恢复环境变量并重新加载配置"""
        for name in ("HOPE_OUTPUT_DIR", "HOPE_HISTORY_DB", "HOPE_JOBS", "HOPE_LOG_LEVEL"):
            monkeypatch.delenv(name, raising=False)
        yield lambda: importlib.reload(config)
        monkeypatch.undo()
        importlib.reload(config)

    def test_output_dir_default_under_base_dir(self, reload_config):
        """测试 OUTPUT_DIR 默认在 BASE_DIR 下"""
        module = reload_config()
        assert module.OUTPUT_DIR == module.BASE_DIR / "runs"

    def test_output_dir_custom_from_env(self, monkeypatch, tmp_path, reload_config):
        """测试 OUTPUT_DIR 可以通过环境变量自定义"""
        monkeypatch.setenv("HOPE_OUTPUT_DIR", str(tmp_path / "custom_runs"))
        module = reload_config()
        assert module.OUTPUT_DIR == tmp_path / "custom_runs"

    def test_history_db_disabled_by_default(self, reload_config):
        """测试未设置 HOPE_HISTORY_DB 时不记录运行历史"""
        module = reload_config()
        assert module.HISTORY_DB_PATH is None

    def test_history_db_from_env(self, monkeypatch, tmp_path, reload_config):
        """测试 HOPE_HISTORY_DB 指定运行历史数据库"""
        monkeypatch.setenv("HOPE_HISTORY_DB", str(tmp_path / "history.db"))
        module = reload_config()
        assert module.HISTORY_DB_PATH == tmp_path / "history.db"

    def test_jobs_and_log_level_from_env(self, monkeypatch, reload_config):
        """测试并行数和日志级别"""
        monkeypatch.setenv("HOPE_JOBS", "4")
        monkeypatch.setenv("HOPE_LOG_LEVEL", "info")
        module = reload_config()
        assert module.DEFAULT_JOBS == 4
        assert module.LOG_LEVEL == "INFO"


class TestSetupLogging:
    """日志配置测试类"""

    @staticmethod
    def _with_root_restored(check):
        root = logging.getLogger()
        handlers, level = list(root.handlers), root.level
        try:
            check(root)
        finally:
            root.handlers[:] = handlers
            root.setLevel(level)

    def test_single_stderr_handler(self):
        """测试只安装一个输出到 stderr 的处理器"""
        def check(root):
            config.setup_logging("INFO")
            config.setup_logging("INFO")
            assert len(root.handlers) == 1
            assert root.handlers[0].stream is sys.stderr
            assert root.level == logging.INFO

        self._with_root_restored(check)

    def test_unknown_level_falls_back_to_warning(self):
        """测试未知的日志级别回退到 WARNING"""
        def check(root):
            config.setup_logging("loud")
            assert root.level == logging.WARNING

        self._with_root_restored(check)
