# -*- coding: utf-8 -*-
"""
预处理模块单元测试

测试 preprocess/ 中的清洗规则、停用词表和词形还原表
"""

import numpy as np
import pytest

from hope_detector import config
from hope_detector.corpus.models import Dataset, Document, Label, Split
from hope_detector.errors import ConfigError, DataFormatError
from hope_detector.preprocess.cleaner import (
    CleaningConfig,
    clean,
    clean_dataset,
    lemmatize,
    remove_stopwords,
    strip_emoji,
    strip_numbers,
    strip_placeholders,
    strip_special,
    strip_urls,
)
from hope_detector.preprocess.resources import (
    STOPWORD_FILES,
    LemmaTable,
    _read_resource,
    load_lemma_table,
    load_stopwords,
)


def bundled_words():
    """内置停用词表和词形还原表中出现的全部词"""
    table = load_lemma_table("en-basic-v1")
    words = set(load_stopwords("en-basic-v1").words) | set(table.entries) | set(table.entries.values())
    return sorted(words) + ["hope", "bright", "dreams", "kings", "running"]


def random_sentences(seed, count, decorated=False):
    """由内置词表随机拼成的句子，decorated 时混入大小写、标点、数字、表情、链接和占位符"""
    rng = np.random.default_rng(seed)
    words = bundled_words()
    extras = ["#USER#", "123", "\U0001F600", "https://x.y/z", "www.hope.org", "[ad]", "3.5", "café"]
    sentences = []
    for _ in range(count):
        tokens = []
        for _ in range(int(rng.integers(0, 15))):
            word = words[int(rng.integers(len(words)))]
            if decorated:
                roll = rng.random()
                if roll < 0.15:
                    word = word.upper()
                elif roll < 0.3:
                    word = word.capitalize() + "!,"
                elif roll < 0.45:
                    word = extras[int(rng.integers(len(extras)))]
            elif rng.random() < 0.3:
                word = word.capitalize()
            tokens.append(word)
        sentences.append(" ".join(tokens))
    return sentences


def is_subsequence(part, whole):
    remaining = iter(whole)
    return all(token in remaining for token in part)


class TestCleaningRules:
    """单条清洗规则测试类"""

    @pytest.mark.parametrize("text, expected", [
        ("see https://x.y/z now", "see  now"),
        ("www.example.com rocks", " rocks"),
        ("no links here", "no links here"),
        ("ftp://files.example.org/a.txt done", " done"),
    ])
    def test_strip_urls(self, text, expected):
        """测试删除链接"""
        assert strip_urls(text) == expected

    @pytest.mark.parametrize("text, expected", [
        ("#USER# hello", " hello"),
        ("[tag] text {note}", " text "),
        ("a # b", "a # b"),
    ])
    def test_strip_placeholders(self, text, expected):
        """测试删除占位符，单独的 # 不是占位符"""
        assert strip_placeholders(text) == expected

    @pytest.mark.parametrize("text, expected", [
        ("good \U0001F600 day", "good  day"),
        ("no emoji", "no emoji"),
        ("\U0001F44D\U0001F3FDok", "ok"),
        ("family \U0001F468\u200d\U0001F469\u200d\U0001F467 time", "family  time"),
    ])
    def test_strip_emoji(self, text, expected):
        """测试删除表情，包括肤色修饰符和零宽连接序列"""
        assert strip_emoji(text) == expected

    def test_strip_numbers(self):
        """测试删除数字"""
        assert strip_numbers("top 10 of 2024") == "top  of "

    def test_strip_special(self):
        """测试特殊字符替换为空格并去掉重音"""
        assert strip_special("café") == "cafe"
        assert strip_special("hello,world").split() == ["hello", "world"]
        assert strip_special("#hope!").split() == ["hope"]

    def test_remove_stopwords(self):
        """测试删除停用词并保持顺序"""
        assert remove_stopwords(["the", "king"], {"the"}) == ["king"]
        assert remove_stopwords([], {"the"}) == []

    def test_remove_stopwords_matches_bundled_list(self):
        """测试与内置停用词表逐词比较的结果一致"""
        stopwords = load_stopwords("en-basic-v1")
        tokens = "i think that the future of our people is very bright".split()

        result = remove_stopwords(tokens, stopwords)

        assert result == [t for t in tokens if t not in stopwords.words]
        assert "future" in result
        assert "the" not in result


class TestLemmatize:
    """词形还原测试类"""

    def test_dictionary_entry(self):
        """测试词典优先"""
        table = LemmaTable(table_id="test", entries={"running": "run"})
        assert lemmatize(["running"], table) == ["run"]

    def test_suffix_rule(self):
        """测试词典未命中时使用后缀规则"""
        table = LemmaTable(table_id="test", entries={})
        assert lemmatize(["cats"], table) == ["cat"]

    def test_protected_suffixes(self):
        """测试 -ss / -us / -is 词尾不被还原"""
        table = LemmaTable(table_id="test", entries={})
        assert lemmatize(["happiness", "virus", "analysis"], table) == ["happiness", "virus", "analysis"]

    def test_bundled_table(self):
        """测试内置词形还原表"""
        table = load_lemma_table("en-basic-v1")
        assert lemmatize(["was", "running"], table) == ["be", "run"]

    def test_fixed_point(self):
        """测试还原到不再变化为止"""
        table = LemmaTable(table_id="test", entries={"better": "good", "good": "good"})
        assert table.lemma("better") == "good"
        assert table.lemma(table.lemma("better")) == "good"

    def test_cycle_stops(self):
        """测试循环词典不会死循环"""
        table = LemmaTable(table_id="test", entries={"aa": "bb", "bb": "aa"})
        assert table.lemma("aa") in ("aa", "bb")


class TestClean:
    """完整清洗流程测试类"""

    def test_social_media_sentence(self):
        """测试一条带占位符的社交媒体文本"""
        text = "#USER# Handsome king of Turkish God bless you and happiness in your life."
        assert clean(text) == "handsome king turkish god bless happiness life"

    def test_empty_text(self):
        """测试空文本"""
        assert clean("") == ""

    def test_every_token_removed(self):
        """测试每个词都被某条规则删除"""
        assert clean("http://a.b/c 123 :) !!!") == ""

    def test_output_is_lowercase_words(self):
        """测试全部规则开启时只输出单空格分隔的小写字母词"""
        result = clean("WOW!!! 100% \U0001F525 Check www.x.com [ad] #TAG# Amazing, Lives")
        assert result == " ".join(result.split())
        assert all(token.isalpha() and token.islower() for token in result.split())

    @pytest.mark.parametrize("text", [
        "#USER# Handsome king of Turkish God bless you and happiness in your life.",
        "They were running to the stores, tired but hopeful!",
        "Blessings to all the kings \U0001F451",
    ])
    def test_idempotent(self, text):
        """测试清洗结果再清洗不变"""
        once = clean(text)
        assert clean(once) == once

    def test_idempotent_on_generated_text(self):
        """测试随机生成的文本清洗两次与清洗一次相同"""
        for text in random_sentences(seed=12, count=3000, decorated=True):
            once = clean(text)
            assert clean(once) == once, text

    def test_surviving_tokens_keep_input_order(self):
        """测试保留下来的词是（词形还原后的）输入词序列的子序列"""
        table = load_lemma_table("en-basic-v1")
        no_lemma = CleaningConfig(lemmatize=False)
        for text in random_sentences(seed=13, count=500):
            tokens = text.lower().split()

            assert is_subsequence(clean(text, no_lemma).split(), tokens), text
            assert is_subsequence(clean(text).split(), [table.lemma(t) for t in tokens]), text

    def test_rules_can_be_disabled(self):
        """测试关闭规则"""
        config = CleaningConfig(
            lowercase=False,
            strip_numbers=False,
            remove_stopwords=False,
            lemmatize=False,
        )
        assert clean("The 2 Kings", config) == "The 2 Kings"

    @pytest.mark.parametrize("rule, text, enabled, disabled", [
        ("strip_urls", "bright https://example.org/path", "bright", None),
        ("strip_placeholders", "#USER# bright", "bright", "user bright"),
        ("strip_emoji", "bright \U0001F600", "bright", "bright \U0001F600"),
        ("lowercase", "Bright Kings", "bright king", "Bright King"),
        ("strip_numbers", "bright 2024", "bright", "bright 2024"),
        ("strip_special", "bright!!! dream", "bright dream", "bright!!! dream"),
        ("remove_stopwords", "the bright dream", "bright dream", "the bright dream"),
        ("lemmatize", "bright dreams", "bright dream", "bright dreams"),
    ])
    def test_single_rule_disabled(self, rule, text, enabled, disabled):
        """测试只关闭一条规则时，该规则负责删除或改写的内容保留下来"""
        result = clean(text, CleaningConfig(**{rule: False}))

        assert clean(text) == enabled
        if disabled is None:
            assert "example" in result.split()
        else:
            assert result == disabled

    def test_clean_dataset_keeps_ids_and_labels(self):
        """测试清洗数据集只替换文本"""
        dataset = Dataset(Split.Train, (
            Document("d1", "The kings WERE here!", Label.Hope),
            Document("d2", "", Label.NotHope),
        ))

        cleaned = clean_dataset(dataset)

        assert cleaned.ids == ["d1", "d2"]
        assert cleaned.labels == [Label.Hope, Label.NotHope]
        assert cleaned.texts == ["king", ""]


class TestCleaningConfig:
    """清洗配置测试类"""

    def test_defaults_enable_every_rule(self):
        """测试默认开启全部规则"""
        values = CleaningConfig().to_dict()
        assert all(v for k, v in values.items() if isinstance(v, bool))

    def test_from_dict_round_trip(self):
        """测试字典往返"""
        config = CleaningConfig(strip_emoji=False)
        assert CleaningConfig.from_dict(config.to_dict()) == config

    def test_unknown_key(self):
        """测试未知配置项"""
        with pytest.raises(ConfigError):
            CleaningConfig.from_dict({"strip_hashtags": True})

    def test_non_boolean_switch(self):
        """测试开关必须是布尔值"""
        with pytest.raises(ConfigError):
            CleaningConfig.from_dict({"lowercase": "yes"})


class TestResources:
    """资源加载测试类"""

    def test_bundled_stopwords_cached(self):
        """测试内置停用词表只加载一次"""
        first = load_stopwords("en-basic-v1")
        assert first is load_stopwords("en-basic-v1")
        assert "the" in first
        assert "hope" not in first

    def test_custom_resource_file(self, tmp_path):
        """测试从文件加载资源"""
        path = tmp_path / "stopwords.txt"
        path.write_text("#version\tmine-v1\nfoo\nbar\n", encoding="utf-8")

        stopwords = load_stopwords(str(path))

        assert len(stopwords) == 2
        assert "foo" in stopwords

    def test_missing_version_header(self, tmp_path):
        """测试缺少版本头"""
        path = tmp_path / "lemmas.txt"
        path.write_text("cats\tcat\n", encoding="utf-8")

        with pytest.raises(DataFormatError):
            load_lemma_table(str(path))

    def test_unknown_resource(self):
        """测试未知的资源标识"""
        with pytest.raises(DataFormatError):
            load_stopwords("no-such-list")

    def test_bundled_resources_read_from_resource_dir(self, tmp_path, monkeypatch):
        """测试内置资源名从 RESOURCE_DIR 读取"""
        (tmp_path / "stopwords_en_basic_v1.txt").write_text("#version\tpatched\nonly\n", encoding="utf-8")
        monkeypatch.setattr(config, "RESOURCE_DIR", tmp_path)

        version, lines = _read_resource("en-basic-v1", STOPWORD_FILES, "停用词表")

        assert version == "patched"
        assert lines == ["only"]
