# -*- coding: utf-8 -*-
"""
实验流程

在训练集上跑 (向量化方式 x 模型) 网格，按开发集宏平均 F1 排名，
前 top_k 个模型在带标签的测试集上评估；测试集无标签时用最佳模型生成预测

词表和 idf 只在训练集上拟合，开发集和测试集只做变换

实验配置是一个 JSON 文件，例如:

    {
        "data": {"train": "train.csv", "dev": "dev.csv", "test": "test.csv", "format": "csv"},
        "cleaning": {"remove_stopwords": true},
        "ngram": {"ngram_range": [1, 8], "min_df": 1},
        "vectorizers": ["count", "tfidf"],
        "models": ["nb", "logreg", "svm-linear", "svm-rbf"],
        "hyperparameters": {"svm-rbf": {"C": 1.0}},
        "top_k": 1,
        "seed": 0
    }

作者: AI Assistant
"""

import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from hope_detector import config as app_config
from hope_detector.corpus.loader import load_dataset
from hope_detector.corpus.models import Dataset, DatasetSchema, Split
from hope_detector.corpus.stats import Collision, check_split_integrity
from hope_detector.errors import ConfigError, DataError, TrainingError, UnlabeledError
from hope_detector.features.ngrams import NGramConfig
from hope_detector.features.vectorizer import VECTORIZER_KINDS, Vectorizer
from hope_detector.harness.pipeline import bundle_from_parts, evaluate_bundle, predict_dataset
from hope_detector.metrics.evaluation import EvalReport, evaluate
from hope_detector.models.base import MODEL_KINDS
from hope_detector.models.predict import predict_labels
from hope_detector.models.registry import check_hyperparameters, train_model
from hope_detector.persist.bundle import ModelBundle
from hope_detector.preprocess.cleaner import CleaningConfig, clean_dataset

logger = logging.getLogger(__name__)

_CONFIG_KEYS = {"data", "cleaning", "ngram", "vectorizers", "models", "hyperparameters", "top_k", "seed"}
_DATA_KEYS = {"train", "dev", "test", "format", "text_column", "label_column", "id_column"}


# ==================== 配置 ====================

@dataclass(frozen=True)
class ExperimentConfig:
    """
    实验配置

    属性:
        train_path / dev_path / test_path: 各划分的数据文件，测试集可选
        format: 数据文件格式
        schema: 列映射
        cleaning: 清洗配置
        ngram: n-gram 配置
        vectorizers: 向量化方式集合（非空）
        models: 模型集合（非空）
        hyperparameters: {模型名: {超参数: 值}}
        top_k: 在测试集上评估的开发集排名前几的模型
        seed: 记录在产物中，当前流程是完全确定性的，不使用随机数
    """
    train_path: Path
    dev_path: Path
    test_path: Optional[Path] = None
    format: str = "csv"
    schema: DatasetSchema = DatasetSchema()
    cleaning: CleaningConfig = CleaningConfig()
    ngram: NGramConfig = NGramConfig()
    vectorizers: Tuple[str, ...] = VECTORIZER_KINDS
    models: Tuple[str, ...] = MODEL_KINDS
    hyperparameters: Dict[str, Dict[str, float]] = field(default_factory=dict, hash=False)
    top_k: int = 1
    seed: Optional[int] = None

    def __post_init__(self):
        if not self.vectorizers:
            raise ConfigError("向量化方式集合不能为空")
        if not self.models:
            raise ConfigError("模型集合不能为空")
        for name in self.vectorizers:
            if name not in VECTORIZER_KINDS:
                raise ConfigError(f"未知的向量化方式: {name!r}")
        for name in self.models:
            check_hyperparameters(name, self.hyperparameters.get(name))
        unused = sorted(set(self.hyperparameters) - set(self.models))
        if unused:
            raise ConfigError(f"超参数中的模型不在网格中: {', '.join(unused)}")
        if len(set(self.vectorizers)) != len(self.vectorizers) or len(set(self.models)) != len(self.models):
            raise ConfigError("向量化方式和模型不能重复")
        if not isinstance(self.top_k, int) or self.top_k < 1:
            raise ConfigError(f"top_k 必须是正整数: {self.top_k!r}")
        if self.format not in app_config.SUPPORTED_FORMATS:
            raise ConfigError(f"不支持的数据格式: {self.format}")

    @property
    def grid(self):
        """网格中的所有 (模型, 向量化方式) 组合"""
        return [(model, vectorizer) for vectorizer in self.vectorizers for model in self.models]

    @classmethod
    def from_dict(cls, data, base_dir=None):
        """
        从配置字典构造，相对路径按 base_dir 解析

        Raises:
            ConfigError: 未知键、缺少数据路径或取值无效
        """
        if not isinstance(data, dict):
            raise ConfigError("实验配置必须是 JSON 对象")
        unknown = sorted(set(data) - _CONFIG_KEYS)
        if unknown:
            raise ConfigError(f"未知的实验配置项: {', '.join(unknown)}")
        paths = data.get("data") or {}
        unknown = sorted(set(paths) - _DATA_KEYS)
        if unknown:
            raise ConfigError(f"未知的数据配置项: {', '.join(unknown)}")
        for key in ("train", "dev"):
            if not paths.get(key):
                raise ConfigError(f"实验配置缺少 data.{key}")

        base_dir = Path(base_dir) if base_dir is not None else Path.cwd()

        def resolve(value):
            if value is None:
                return None
            path = Path(value)
            return path if path.is_absolute() else base_dir / path

        schema = DatasetSchema(
            text_column=paths.get("text_column", "text"),
            label_column=paths.get("label_column", "label"),
            id_column=paths.get("id_column"),
        )
        hyperparameters = data.get("hyperparameters") or {}
        if not isinstance(hyperparameters, dict) or not all(isinstance(v, dict) for v in hyperparameters.values()):
            raise ConfigError("hyperparameters 必须是 {模型: {参数: 值}} 形式")
        try:
            return cls(
                train_path=resolve(paths["train"]),
                dev_path=resolve(paths["dev"]),
                test_path=resolve(paths.get("test")),
                format=paths.get("format", "csv"),
                schema=schema,
                cleaning=CleaningConfig.from_dict(data.get("cleaning") or {}),
                ngram=NGramConfig.from_dict(data.get("ngram") or {}),
                vectorizers=tuple(data.get("vectorizers", VECTORIZER_KINDS)),
                models=tuple(data.get("models", MODEL_KINDS)),
                hyperparameters={k: dict(v) for k, v in hyperparameters.items()},
                top_k=data.get("top_k", 1),
                seed=data.get("seed"),
            )
        except (TypeError, ValueError) as e:
            raise ConfigError(f"实验配置无效: {e}") from e

    @classmethod
    def load(cls, path):
        """读取 JSON 配置文件，数据路径相对于配置文件所在目录"""
        path = Path(path)
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError as e:
            raise ConfigError(f"实验配置文件不存在: {path}") from e
        except json.JSONDecodeError as e:
            raise ConfigError(f"实验配置不是合法的 JSON: {e}") from e
        return cls.from_dict(data, base_dir=path.parent)

    def to_dict(self):
        """可写回 JSON 的配置（路径转为字符串）"""
        return {
            "data": {
                "train": str(self.train_path),
                "dev": str(self.dev_path),
                "test": None if self.test_path is None else str(self.test_path),
                "format": self.format,
                "text_column": self.schema.text_column,
                "label_column": self.schema.label_column,
                "id_column": self.schema.id_column,
            },
            "cleaning": self.cleaning.to_dict(),
            "ngram": self.ngram.to_dict(),
            "vectorizers": list(self.vectorizers),
            "models": list(self.models),
            "hyperparameters": self.hyperparameters,
            "top_k": self.top_k,
            "seed": self.seed,
        }


# ==================== 结果 ====================

@dataclass(frozen=True)
class LeaderboardRow:
    """
    排行榜中的一行

    属性:
        model / vectorizer: 网格坐标
        dev_report: 开发集评估（训练失败时为 None）
        test_report: 测试集评估（只有前 top_k 行且测试集带标签时才有）
        train_seconds: 模型训练耗时（秒）
        error: 训练失败时的错误信息
        bundle: 训练好的模型包
    """
    model: str
    vectorizer: str
    dev_report: Optional[EvalReport] = None
    test_report: Optional[EvalReport] = None
    train_seconds: float = field(default=0.0, compare=False)
    error: Optional[str] = None
    bundle: Optional[ModelBundle] = field(default=None, compare=False, repr=False)

    @property
    def ok(self):
        return self.error is None and self.dev_report is not None

    @property
    def dev_macro_f1(self):
        return self.dev_report.macro_f1 if self.dev_report is not None else None

    def sort_key(self):
        """开发集宏 F1 降序，相同时按 (模型, 向量化方式) 字典序；失败的行排在最后"""
        if not self.ok:
            return (1, 0.0, self.model, self.vectorizer)
        return (0, -self.dev_report.macro_f1, self.model, self.vectorizer)


def sort_leaderboard(rows):
    return sorted(rows, key=LeaderboardRow.sort_key)


def select_best(leaderboard):
    """
    选出开发集宏 F1 最高的行

    Raises:
        DataError: 排行榜为空
        TrainingError: 所有行都训练失败
    """
    rows = list(leaderboard)
    if not rows:
        raise DataError("排行榜为空，无法选择最佳模型")
    successful = [row for row in rows if row.ok]
    if not successful:
        raise TrainingError("网格中所有模型都训练失败")
    return min(successful, key=LeaderboardRow.sort_key)


@dataclass
class ExperimentResult:
    """
    一次实验的结果，可以像排行榜列表一样迭代

    属性:
        config: 实验配置
        rows: 排好序的排行榜
        collisions: 划分之间的重复文本
        test_ids / test_predictions: 测试集无标签时最佳模型的预测
    """
    config: ExperimentConfig
    rows: List[LeaderboardRow]
    collisions: List[Collision] = field(default_factory=list)
    test_ids: Optional[List[str]] = None
    test_predictions: Optional[list] = None

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, index):
        return self.rows[index]

    @property
    def best(self):
        return select_best(self.rows)

    @property
    def test_evaluated(self):
        return any(row.test_report is not None for row in self.rows)


# ==================== 运行 ====================

def _train_cell(model, vectorizer_name, vectorizer, X_train, y_train, X_dev, y_dev, cleaning, params):
    """训练并评估网格中的一个格子，训练错误记录在行里"""
    start = time.perf_counter()
    try:
        trained = train_model(model, X_train, y_train, params)
    except TrainingError as e:
        elapsed = time.perf_counter() - start
        logger.warning("%s + %s 训练失败: %s", model, vectorizer_name, e)
        return LeaderboardRow(model=model, vectorizer=vectorizer_name, train_seconds=elapsed, error=str(e))
    elapsed = time.perf_counter() - start

    dev_report = evaluate(y_dev, predict_labels(trained, X_dev))
    logger.info(
        "%s + %s: 开发集宏 F1 %.4f, 训练 %.2f 秒", model, vectorizer_name, dev_report.macro_f1, elapsed
    )
    return LeaderboardRow(
        model=model,
        vectorizer=vectorizer_name,
        dev_report=dev_report,
        train_seconds=elapsed,
        bundle=bundle_from_parts(cleaning, vectorizer, trained),
    )


def _load_splits(config):
    train = load_dataset(config.train_path, config.format, config.schema, Split.Train)
    dev = load_dataset(config.dev_path, config.format, config.schema, Split.Dev)
    test = None
    if config.test_path is not None:
        test = load_dataset(config.test_path, config.format, config.schema, Split.Test)
    return train, dev, test


def run_experiment(config, jobs=1, splits=None):
    """
    运行实验网格

    Args:
        config: ExperimentConfig
        jobs: 并行训练的格子数
        splits: 可选的 (train, dev, test) 数据集，给出时不再从文件读取（test 可为 None）

    Returns:
        ExperimentResult: 排好序的排行榜及测试集结果

    Raises:
        UnlabeledError: 训练集或开发集有无标签文档
        VocabularyError: 训练集清洗后没有可用的 n-gram
    """
    train, dev, test = splits if splits is not None else _load_splits(config)
    for dataset, name in ((train, "训练集"), (dev, "开发集")):
        if not dataset.is_labeled():
            raise UnlabeledError(f"{name}必须全部带标签")

    collisions = check_split_integrity(train, dev, test if test is not None else Dataset(Split.Test))
    if collisions:
        logger.warning("划分之间有 %d 条重复文本", len(collisions))

    cleaned_train = clean_dataset(train, config.cleaning)
    cleaned_dev = clean_dataset(dev, config.cleaning)

    # 每种向量化方式只在训练集上拟合一次，供该行的所有模型共享
    features = {}
    for name in config.vectorizers:
        vectorizer = Vectorizer(name, config.ngram).fit(cleaned_train)
        features[name] = (vectorizer, vectorizer.transform(cleaned_train), vectorizer.transform(cleaned_dev))

    tasks = [
        (
            model,
            name,
            features[name][0],
            features[name][1],
            cleaned_train.labels,
            features[name][2],
            cleaned_dev.labels,
            config.cleaning,
            config.hyperparameters.get(model),
        )
        for model, name in config.grid
    ]
    logger.info("开始训练网格: %d 个组合, 并行数 %d", len(tasks), jobs)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(lambda task: _train_cell(*task), tasks))
    else:
        rows = [_train_cell(*task) for task in tasks]
    rows = sort_leaderboard(rows)

    result = ExperimentResult(config=config, rows=rows, collisions=collisions)
    best = select_best(rows)

    if test is not None and len(test) and test.is_labeled():
        ranked = [row for row in rows if row.ok][: config.top_k]
        evaluated = {id(row): evaluate_bundle(row.bundle, test) for row in ranked}
        result.rows = [
            LeaderboardRow(
                model=row.model,
                vectorizer=row.vectorizer,
                dev_report=row.dev_report,
                test_report=evaluated.get(id(row)),
                train_seconds=row.train_seconds,
                error=row.error,
                bundle=row.bundle,
            )
            if id(row) in evaluated else row
            for row in rows
        ]
        logger.info("测试集评估完成: %d 个模型", len(evaluated))
    elif test is not None:
        result.test_ids = test.ids
        result.test_predictions = predict_dataset(best.bundle, test)
        logger.info("测试集无标签，已用最佳模型 %s + %s 生成预测", best.model, best.vectorizer)
    return result
