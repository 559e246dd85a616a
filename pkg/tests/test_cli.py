# -*- coding: utf-8 -*-
"""
命令行单元测试

测试 hope_detector/__main__.py 的子命令、输出和退出码
"""

import json
from unittest.mock import Mock

import pytest

from hope_detector import config
from hope_detector.__main__ import main
from hope_detector.corpus.loader import write_dataset
from hope_detector.corpus.models import DatasetSchema
from hope_detector.database import models
from hope_detector.harness import generate_synthetic_corpus


@pytest.fixture(autouse=True)
def quiet_logging(monkeypatch):
    """不让命令行修改根日志处理器"""
    monkeypatch.setattr(config, "setup_logging", Mock())


@pytest.fixture
def fresh_history(monkeypatch):
    """每个测试使用自己的运行历史数据库连接"""
    monkeypatch.setattr(models, "engine", None)
    monkeypatch.setattr(models, "SessionLocal", None)
    monkeypatch.setattr(models, "_db_path", None)
    monkeypatch.setattr(config, "HISTORY_DB_PATH", None)
    yield
    if models.engine is not None:
        models.engine.dispose()


@pytest.fixture(scope="module")
def data_dir(tmp_path_factory):
    """写出合成语料的 train / dev / test 三个 CSV 文件"""
    directory = tmp_path_factory.mktemp("data")
    train, dev, test = generate_synthetic_corpus(n_docs=150, seed=2)
    schema = DatasetSchema(id_column="id")
    for name, dataset in (("train", train), ("dev", dev), ("test", test)):
        write_dataset(dataset, directory / f"{name}.csv", "csv", schema)
    return directory


@pytest.fixture
def experiment_config(tmp_path, data_dir):
    path = tmp_path / "experiment.json"
    path.write_text(json.dumps({
        "data": {
            "train": str(data_dir / "train.csv"),
            "dev": str(data_dir / "dev.csv"),
            "test": str(data_dir / "test.csv"),
            "id_column": "id",
        },
        "ngram": {"ngram_range": [1, 2]},
        "models": ["nb", "svm-linear"],
        "seed": 11,
    }), encoding="utf-8")
    return path


class TestUsage:
    """用法错误测试类"""

    def test_no_arguments(self, capsys):
        """测试没有子命令"""
        assert main([]) == 1
        err = capsys.readouterr().err
        assert err.startswith("usage: hope-detector")
        assert "错误:" in err

    def test_unknown_option(self, capsys):
        """测试未知参数"""
        assert main(["stats", "--bogus"]) == 1
        assert "错误:" in capsys.readouterr().err

    def test_missing_required_argument(self, capsys):
        """测试缺少 --input"""
        assert main(["stats"]) == 1
        assert "--input" in capsys.readouterr().err

    def test_log_level_is_applied(self, tmp_path):
        """测试 --log-level 传给日志配置"""
        path = tmp_path / "d.csv"
        path.write_text("text,label\nhope,Hope\n", encoding="utf-8")

        main(["--log-level", "debug", "stats", "--input", str(path)])

        config.setup_logging.assert_called_once_with("debug")


class TestStats:
    """stats 子命令测试类"""

    def test_counts(self, tmp_path, capsys):
        """测试类别计数输出"""
        path = tmp_path / "train.csv"
        path.write_text("text,label\na good day,Hope\nwe rise,Hope\nso bad,Not Hope\n", encoding="utf-8")

        assert main(["stats", "--input", str(path)]) == 0
        assert capsys.readouterr().out == "Hope\t2\nNotHope\t1\nTotal\t3\n"

    def test_collisions(self, tmp_path, capsys):
        """测试报告训练集与开发集共享的文本，开发集可以无标签"""
        train = tmp_path / "train.csv"
        train.write_text("text,label\nWe Rise,Hope\nso bad,Not Hope\n", encoding="utf-8")
        dev = tmp_path / "dev.csv"
        dev.write_text("text\nwe  rise\nsomething else\n", encoding="utf-8")

        assert main(["stats", "--input", str(train), "--dev", str(dev)]) == 0

        out = capsys.readouterr().out
        assert "Collisions\t1\n" in out
        assert "train/dev\twe rise\n" in out

    def test_unknown_label_is_data_error(self, tmp_path, capsys):
        """测试未知标签返回退出码 2"""
        path = tmp_path / "train.csv"
        path.write_text("text,label\nfine,Hope\nhmm,Maybe\n", encoding="utf-8")

        assert main(["stats", "--input", str(path)]) == 2
        assert "Maybe" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        """测试数据文件不存在"""
        assert main(["stats", "--input", str(tmp_path / "nope.csv")]) == 2


class TestClean:
    """clean 子命令测试类"""

    def test_writes_cleaned_dataset(self, tmp_path):
        """测试写出清洗后的数据集"""
        source = tmp_path / "raw.csv"
        source.write_text("text,label\n#USER# The Kings WERE here!,Hope\n", encoding="utf-8")
        target = tmp_path / "clean.csv"

        assert main(["clean", "--input", str(source), "--output", str(target)]) == 0
        assert target.read_text(encoding="utf-8") == "text,label\nking,Hope\n"

    def test_cleaning_config(self, tmp_path):
        """测试 --config 关闭部分规则"""
        source = tmp_path / "raw.csv"
        source.write_text("text\nThe Kings\n", encoding="utf-8")
        settings = tmp_path / "settings.json"
        settings.write_text(json.dumps({"cleaning": {"remove_stopwords": False, "lemmatize": False}}), encoding="utf-8")
        target = tmp_path / "clean.csv"

        main(["clean", "--input", str(source), "--output", str(target), "--config", str(settings)])

        assert target.read_text(encoding="utf-8") == "text\nthe kings\n"

    def test_unknown_config_key(self, tmp_path):
        """测试配置中的未知项"""
        source = tmp_path / "raw.csv"
        source.write_text("text\nx\n", encoding="utf-8")
        settings = tmp_path / "settings.json"
        settings.write_text(json.dumps({"epochs": 3}), encoding="utf-8")

        assert main(["clean", "--input", str(source), "--output", str(tmp_path / "o.csv"), "--config", str(settings)]) == 1


class TestTrainEvalPredict:
    """train / eval / predict 子命令测试类"""

    @pytest.fixture
    def bundle_path(self, tmp_path, data_dir, capsys):
        path = tmp_path / "model.bundle"
        code = main([
            "train", "--input", str(data_dir / "train.csv"), "--id-column", "id",
            "--model", "nb", "--vectorizer", "count", "--output", str(path),
        ])
        assert code == 0
        capsys.readouterr()
        return path

    def test_train_reports_digest(self, tmp_path, data_dir, capsys):
        """测试训练输出模型包摘要，重复训练摘要相同"""
        outputs = []
        for name in ("a.bundle", "b.bundle"):
            main(["train", "--input", str(data_dir / "train.csv"), "--output", str(tmp_path / name)])
            outputs.append(capsys.readouterr().out.splitlines()[-1])

        assert outputs[0].startswith("sha256\t")
        assert outputs[0] == outputs[1]
        assert (tmp_path / "a.bundle").read_bytes() == (tmp_path / "b.bundle").read_bytes()

    def test_train_records_seed(self, tmp_path, data_dir, capsys):
        """测试训练输出中记录 --seed，且不改变模型包"""
        base = ["train", "--input", str(data_dir / "train.csv")]
        assert main(base + ["--output", str(tmp_path / "seeded.bundle"), "--seed", "5"]) == 0
        lines = capsys.readouterr().out.splitlines()
        main(base + ["--output", str(tmp_path / "plain.bundle")])
        plain = capsys.readouterr().out.splitlines()

        assert "seed\t5" in lines
        assert lines[-1].startswith("sha256\t")
        assert not any(line.startswith("seed\t") for line in plain)
        assert (tmp_path / "seeded.bundle").read_bytes() == (tmp_path / "plain.bundle").read_bytes()

    def test_eval_is_repeatable(self, bundle_path, data_dir, capsys):
        """测试两次评估输出完全相同"""
        args = ["eval", "--input", str(data_dir / "dev.csv"), "--id-column", "id", "--bundle", str(bundle_path)]

        assert main(args) == 0
        first = capsys.readouterr().out
        main(args)
        second = capsys.readouterr().out

        assert first == second
        header, row = first.splitlines()
        assert header.startswith("Model\tWeighted Precision")
        assert row.startswith("nb+count\t")

    def test_eval_machine_style(self, bundle_path, data_dir, capsys):
        """测试 machine 样式"""
        main(["eval", "--input", str(data_dir / "dev.csv"), "--bundle", str(bundle_path), "--style", "machine"])
        assert capsys.readouterr().out.startswith("weighted_precision\t")

    def test_eval_corrupt_bundle(self, tmp_path, data_dir):
        """测试损坏的模型包返回数据错误"""
        corrupt = tmp_path / "corrupt.bundle"
        corrupt.write_text("HOPEBUNDLE\t1\n", encoding="utf-8")
        assert main(["eval", "--input", str(data_dir / "dev.csv"), "--bundle", str(corrupt)]) == 2

    def test_predict(self, tmp_path, bundle_path, data_dir):
        """测试预测文件每个文档一行"""
        output = tmp_path / "predictions.tsv"

        code = main([
            "predict", "--input", str(data_dir / "test.csv"), "--id-column", "id",
            "--bundle", str(bundle_path), "--output", str(output),
        ])

        assert code == 0
        lines = output.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "id\tlabel"
        assert len(lines) == 31
        assert lines[1].startswith("test-0\t")

    def test_predict_config_mismatch(self, tmp_path, bundle_path, data_dir):
        """测试 --config 与模型包不一致时返回数据错误"""
        settings = tmp_path / "settings.json"
        settings.write_text(json.dumps({"ngram": {"ngram_range": [1, 2]}}), encoding="utf-8")

        code = main([
            "predict", "--input", str(data_dir / "test.csv"), "--bundle", str(bundle_path),
            "--output", str(tmp_path / "p.tsv"), "--config", str(settings),
        ])

        assert code == 2


class TestExperiment:
    """experiment 与 history 子命令测试类"""

    def test_writes_artifacts_and_history(self, tmp_path, experiment_config, capsys, fresh_history):
        """测试写出产物并记录运行历史"""
        output = tmp_path / "run"
        history = tmp_path / "history.db"

        code = main([
            "experiment", "--config", str(experiment_config), "--output", str(output),
            "--history-db", str(history),
        ])

        assert code == 0
        out = capsys.readouterr().out
        assert out.startswith("Model\tVectorizer\tMacro Precision\tMacro Recall\tMacro F1\n")
        assert "运行历史: #1" in out
        for name in ("leaderboard.txt", "leaderboard.tsv", "timings.tsv", "test_report.txt", "best.bundle"):
            assert (output / name).is_file()
        assert (output / "leaderboard.tsv").read_text(encoding="utf-8").startswith("seed\t11\nrows\t4\n")

        assert main(["history", "--history-db", str(history)]) == 0
        assert capsys.readouterr().out.splitlines()[1].startswith("1\t")
        assert main(["history", "--history-db", str(history), "--run", "1"]) == 0
        assert len(capsys.readouterr().out.splitlines()) == 5
        assert main(["history", "--history-db", str(history), "--run", "9"]) == 1

    def test_leaderboard_is_repeatable(self, tmp_path, experiment_config, fresh_history):
        """测试两次运行的排行榜逐字节相同"""
        for name in ("a", "b"):
            main(["experiment", "--config", str(experiment_config), "--output", str(tmp_path / name)])

        for name in ("leaderboard.txt", "leaderboard.tsv", "best.bundle", "test_report.txt"):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()

    def test_overrides(self, tmp_path, experiment_config, capsys, fresh_history):
        """测试命令行覆盖模型和向量化方式"""
        code = main([
            "experiment", "--config", str(experiment_config), "--output", str(tmp_path / "run"),
            "--model", "nb", "--vectorizer", "tfidf", "--seed", "3",
        ])

        assert code == 0
        table = capsys.readouterr().out.splitlines()
        assert table[1].startswith("nb\ttfidf\t")
        assert (tmp_path / "run" / "leaderboard.tsv").read_text(encoding="utf-8").startswith("seed\t3\nrows\t1\n")

    def test_invalid_jobs(self, tmp_path, experiment_config, fresh_history):
        """测试 --jobs 必须为正"""
        assert main(["experiment", "--config", str(experiment_config), "--jobs", "0"]) == 1

    def test_missing_config_file(self, tmp_path, fresh_history):
        """测试配置文件不存在"""
        assert main(["experiment", "--config", str(tmp_path / "missing.json")]) == 1

    def test_history_without_database(self, capsys, fresh_history):
        """测试没有配置运行历史数据库"""
        assert main(["history"]) == 1
        assert "HOPE_HISTORY_DB" in capsys.readouterr().err
