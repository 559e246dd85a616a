#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Hope Detector 命令行

子命令:
    stats       统计类别分布，可选检查划分之间的重复文本
    clean       清洗数据集并写出
    train       训练一个 (向量化方式, 模型) 组合并保存模型包
    eval        用模型包评估带标签的数据集
    predict     用模型包预测并写出 TSV
    experiment  运行实验网格并写出排行榜等产物
    history     查看实验运行历史

退出码: 0 成功, 1 用法错误, 2 数据错误, 3 训练错误

使用方式:
    hope-detector stats --input train.csv --format csv
    hope-detector experiment --config experiment.json --output runs/exp1 --jobs 4

作者: AI Assistant
"""

import argparse
import dataclasses
import json
import logging
import sys
from pathlib import Path

from hope_detector import config
from hope_detector.corpus.loader import load_dataset, write_dataset
from hope_detector.corpus.models import Dataset, DatasetSchema, Split
from hope_detector.corpus.stats import check_split_integrity, stats
from hope_detector.errors import ConfigError, HopeDetectorError, UsageError
from hope_detector.features.ngrams import NGramConfig
from hope_detector.features.vectorizer import VECTORIZER_KINDS
from hope_detector.harness.experiment import ExperimentConfig, run_experiment
from hope_detector.harness.leaderboard import format_leaderboard, row_name, write_artifacts
from hope_detector.harness.pipeline import evaluate_bundle, fit_pipeline, predict_file
from hope_detector.metrics.report import REPORT_STYLES, format_report
from hope_detector.models.base import MODEL_KINDS
from hope_detector.persist.bundle import bundle_digest, load_bundle, save_bundle
from hope_detector.preprocess.cleaner import CleaningConfig, clean_dataset

logger = logging.getLogger(__name__)

# clean / train / predict 的 --config 只读取这几项，可以直接复用实验配置文件
_PIPELINE_KEYS = ("cleaning", "ngram", "hyperparameters")


class _ArgumentParser(argparse.ArgumentParser):
    """参数错误抛出 UsageError，由 main 统一处理退出码"""

    def error(self, message):
        raise UsageError(message)


# ==================== 参数辅助 ====================

def _schema(args, labeled=True):
    return DatasetSchema(
        text_column=args.text_column,
        label_column=args.label_column if labeled else None,
        id_column=args.id_column,
    )


def _load(args, path, split):
    return load_dataset(path, args.format, _schema(args), split)


def _pipeline_settings(path):
    """
    读取 --config 中的清洗、n-gram 和超参数配置

    Returns:
        Tuple[CleaningConfig, NGramConfig, dict]
    """
    if path is None:
        return CleaningConfig(), NGramConfig(), {}
    data = _read_json(path)
    if "data" in data:
        experiment = ExperimentConfig.from_dict(data, base_dir=Path(path).parent)
        return experiment.cleaning, experiment.ngram, experiment.hyperparameters
    unknown = sorted(set(data) - set(_PIPELINE_KEYS))
    if unknown:
        raise ConfigError(f"未知的配置项: {', '.join(unknown)}")
    hyperparameters = data.get("hyperparameters") or {}
    if not isinstance(hyperparameters, dict):
        raise ConfigError("hyperparameters 必须是 {模型: {参数: 值}} 形式")
    return (
        CleaningConfig.from_dict(data.get("cleaning") or {}),
        NGramConfig.from_dict(data.get("ngram") or {}),
        hyperparameters,
    )


def _read_json(path):
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError as e:
        raise ConfigError(f"配置文件不存在: {path}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"配置文件不是合法的 JSON: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError("配置文件必须是 JSON 对象")
    return data


def _require(args, *names):
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError(f"缺少参数: {', '.join(missing)}")


# ==================== 子命令 ====================

def cmd_stats(args):
    _require(args, "input")
    dataset = _load(args, args.input, Split.Train)
    counts = stats(dataset)
    print(f"Hope\t{counts.hope}")
    print(f"NotHope\t{counts.not_hope}")
    print(f"Total\t{counts.total}")

    if args.dev is not None or args.test is not None:
        # 只比较文本，开发集和测试集的标签可以缺失
        dev = _load(args, args.dev, Split.Test) if args.dev else None
        test = _load(args, args.test, Split.Test) if args.test else None
        collisions = check_split_integrity(
            dataset,
            dev if dev is not None else Dataset(Split.Dev),
            test if test is not None else Dataset(Split.Test),
        )
        print(f"Collisions\t{len(collisions)}")
        for collision in collisions:
            print(f"{collision.first}/{collision.second}\t{collision.text}")
    return 0


def cmd_clean(args):
    _require(args, "input", "output")
    cleaning, _, _ = _pipeline_settings(args.config)
    dataset = _load(args, args.input, Split.Test)
    cleaned = clean_dataset(dataset, cleaning)
    write_dataset(cleaned, args.output, args.format, _schema(args))
    print(f"已清洗 {len(cleaned)} 条文档: {args.output}")
    return 0


def cmd_train(args):
    _require(args, "input", "output")
    cleaning, ngram, hyperparameters = _pipeline_settings(args.config)
    train = _load(args, args.input, Split.Train)
    bundle = fit_pipeline(
        train,
        vectorizer=args.vectorizer,
        model=args.model,
        cleaning=cleaning,
        ngram=ngram,
        params=hyperparameters.get(args.model),
    )
    save_bundle(bundle, args.output)
    print(f"模型包已保存: {args.output} ({args.model} + {args.vectorizer}, 词表 {len(bundle.vocabulary)})")
    if args.seed is not None:
        # 流程不使用随机数，种子只原样记录
        print(f"seed\t{args.seed}")
    print(f"sha256\t{bundle_digest(bundle)}")
    return 0


def cmd_eval(args):
    _require(args, "input", "bundle")
    bundle = load_bundle(args.bundle)
    dataset = _load(args, args.input, Split.Dev)
    report = evaluate_bundle(bundle, dataset)
    model = f"{bundle.model_name}+{bundle.vectorizer_name}" if args.style == "table" else None
    sys.stdout.write(format_report(report, style=args.style, model=model))
    return 0


def cmd_predict(args):
    _require(args, "input", "bundle", "output")
    bundle = load_bundle(args.bundle)
    cleaning, ngram = None, None
    if args.config is not None:
        cleaning, ngram, _ = _pipeline_settings(args.config)
    dataset = load_dataset(args.input, args.format, _schema(args, labeled=False), Split.Test)
    count = predict_file(bundle, dataset, args.output, cleaning=cleaning, ngram=ngram)
    print(f"已写出 {count} 条预测: {args.output}")
    return 0


def cmd_experiment(args):
    _require(args, "config")
    experiment = ExperimentConfig.load(args.config)
    overrides = {}
    if args.input is not None:
        overrides["train_path"] = Path(args.input)
    if args.dev is not None:
        overrides["dev_path"] = Path(args.dev)
    if args.test is not None:
        overrides["test_path"] = Path(args.test)
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.top_k is not None:
        overrides["top_k"] = args.top_k
    if args.vectorizer is not None:
        overrides["vectorizers"] = (args.vectorizer,)
    if args.model is not None:
        overrides["models"] = (args.model,)
        overrides["hyperparameters"] = {
            k: v for k, v in experiment.hyperparameters.items() if k == args.model
        }
    if overrides:
        experiment = dataclasses.replace(experiment, **overrides)

    if args.jobs < 1:
        raise UsageError(f"--jobs 必须是正整数: {args.jobs}")
    result = run_experiment(experiment, jobs=args.jobs)
    output_dir = Path(args.output) if args.output else config.OUTPUT_DIR
    write_artifacts(result, output_dir)
    sys.stdout.write(format_leaderboard(result, "table"))

    best = result.best
    print(f"最佳模型: {row_name(best)} (开发集宏 F1 {best.dev_report.macro_f1:.4f})")
    print(f"产物目录: {output_dir}")

    history_db = args.history_db or config.HISTORY_DB_PATH
    if history_db is not None:
        from hope_detector.database.db import record_experiment
        from hope_detector.database.models import init_db
        init_db(history_db)
        run_id = record_experiment(result, experiment)
        print(f"运行历史: #{run_id}")
    return 0


def cmd_history(args):
    from hope_detector.database.db import get_best_results, get_recent_runs, get_run_results
    from hope_detector.database.models import init_db

    init_db(args.history_db or config.HISTORY_DB_PATH)

    def score(value):
        return "-" if value is None else f"{value:.4f}"

    if args.run is not None:
        results = get_run_results(args.run)
        if not results:
            raise UsageError(f"运行 #{args.run} 不存在")
        print("Rank\tModel\tVectorizer\tDev Macro F1\tTest Macro F1")
        for r in results:
            print(f"{r.rank}\t{r.model}\t{r.vectorizer}\t{score(r.dev_macro_f1)}\t{score(r.test_macro_f1)}")
        return 0

    if args.best:
        print("Run\tModel\tVectorizer\tDev Macro F1")
        for r in get_best_results(args.limit):
            print(f"{r.run_id}\t{r.model}\t{r.vectorizer}\t{score(r.dev_macro_f1)}")
        return 0

    print("Run\tCreated\tBest\tDev Macro F1\tTest Macro F1")
    for run in get_recent_runs(args.limit):
        best = f"{run.best_model}+{run.best_vectorizer}" if run.best_model else "-"
        created = run.created_at.strftime("%Y-%m-%d %H:%M:%S") if run.created_at else "-"
        print(f"{run.id}\t{created}\t{best}\t{score(run.best_dev_macro_f1)}\t{score(run.best_test_macro_f1)}")
    return 0


COMMANDS = {
    "stats": cmd_stats,
    "clean": cmd_clean,
    "train": cmd_train,
    "eval": cmd_eval,
    "predict": cmd_predict,
    "experiment": cmd_experiment,
    "history": cmd_history,
}


# ==================== 参数解析 ====================

def _add_data_arguments(parser, dev_test=False):
    parser.add_argument("--input", help="数据文件")
    if dev_test:
        parser.add_argument("--dev", help="开发集文件")
        parser.add_argument("--test", help="测试集文件")
    parser.add_argument("--format", choices=config.SUPPORTED_FORMATS, default="csv", help="数据格式")
    parser.add_argument("--text-column", default="text", help="文本列名")
    parser.add_argument("--label-column", default="label", help="标签列名")
    parser.add_argument("--id-column", default=None, help="id 列名（默认自动生成）")


def build_parser():
    parser = _ArgumentParser(prog="hope-detector", description="希望言论分类工具")
    parser.add_argument("--log-level", default=None, help="日志级别（默认 HOPE_LOG_LEVEL 或 WARNING）")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = subparsers.add_parser("stats", help="统计类别分布")
    _add_data_arguments(p, dev_test=True)

    p = subparsers.add_parser("clean", help="清洗数据集")
    _add_data_arguments(p)
    p.add_argument("--output", help="输出文件")
    p.add_argument("--config", help="JSON 配置（读取 cleaning 段）")

    p = subparsers.add_parser("train", help="训练并保存模型包")
    _add_data_arguments(p)
    p.add_argument("--output", help="模型包路径")
    p.add_argument("--config", help="JSON 配置（cleaning / ngram / hyperparameters）")
    p.add_argument("--model", choices=MODEL_KINDS, default="svm-linear")
    p.add_argument("--vectorizer", choices=VECTORIZER_KINDS, default="tfidf")
    p.add_argument("--seed", type=int, default=None, help="记录在输出中的随机种子，当前流程不使用随机数")

    p = subparsers.add_parser("eval", help="评估模型包")
    _add_data_arguments(p)
    p.add_argument("--bundle", help="模型包路径")
    p.add_argument("--style", choices=REPORT_STYLES, default="table", help="报告样式")

    p = subparsers.add_parser("predict", help="预测并写出 TSV")
    _add_data_arguments(p)
    p.add_argument("--bundle", help="模型包路径")
    p.add_argument("--output", help="预测文件路径")
    p.add_argument("--config", help="期望的流水线配置，与模型包不一致时报错")

    p = subparsers.add_parser("experiment", help="运行实验网格")
    p.add_argument("--config", help="实验配置 JSON")
    p.add_argument("--input", help="覆盖配置中的训练集")
    p.add_argument("--dev", help="覆盖配置中的开发集")
    p.add_argument("--test", help="覆盖配置中的测试集")
    p.add_argument("--output", help="产物目录（默认 HOPE_OUTPUT_DIR）")
    p.add_argument("--model", choices=MODEL_KINDS, default=None, help="只运行一个模型")
    p.add_argument("--vectorizer", choices=VECTORIZER_KINDS, default=None, help="只运行一种向量化方式")
    p.add_argument("--jobs", type=int, default=config.DEFAULT_JOBS, help="并行训练数")
    p.add_argument("--seed", type=int, default=None, help="记录在产物中的随机种子")
    p.add_argument("--top-k", type=int, default=None, help="在测试集上评估的模型数")
    p.add_argument("--history-db", default=None, help="运行历史数据库")

    p = subparsers.add_parser("history", help="查看实验运行历史")
    p.add_argument("--history-db", default=None, help="运行历史数据库")
    p.add_argument("--limit", type=int, default=10, help="显示数量")
    p.add_argument("--run", type=int, default=None, help="显示某次运行的排行榜")
    p.add_argument("--best", action="store_true", help="跨运行的最佳结果")
    return parser


def main(argv=None):
    """
    命令行入口

    Args:
        argv: 参数列表，默认 sys.argv[1:]

    Returns:
        int: 退出码
    """
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        sys.stderr.write(parser.format_usage())
        print(f"错误: {e}", file=sys.stderr)
        return e.exit_code

    config.setup_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except HopeDetectorError as e:
        logger.debug("命令失败", exc_info=True)
        print(f"错误: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
