# -*- coding: utf-8 -*-
"""
合成语料

生成两个类别关键词分布明显不同的社交媒体风格短文本，
用于端到端检查整个实验流程（真实数据集不随项目发布）

每个文档由若干类别关键词和中性填充词组成，少量文档混入另一类别的关键词，
并随机加入占位符、链接、数字和表情，让清洗规则都有事可做

作者: AI Assistant
"""

import numpy as np

from hope_detector.corpus.models import Dataset, Document, Label, Split

HOPE_WORDS = (
    "hope", "dream", "believe", "future", "bright", "together", "achieve",
    "strength", "faith", "succeed", "inspire", "courage", "recover", "rise",
    "wish", "goal", "optimism", "brave",
)

NOT_HOPE_WORDS = (
    "angry", "hate", "broken", "terrible", "worst", "useless", "boring",
    "ugly", "pain", "tired", "stupid", "awful", "disgusting", "annoying",
    "rude", "garbage", "lazy", "nonsense",
)

FILLER_WORDS = (
    "today", "people", "video", "comment", "song", "world", "music", "morning",
    "city", "game", "team", "street", "news", "phone", "coffee", "weekend",
    "school", "weather", "channel", "movie", "family", "dinner", "office", "market",
)

DECORATIONS = ("#USER#", "https://t.co/abc123", "2024", "\U0001F600", "\U0001F44D\U0001F3FD", "!!!")

# 训练 / 开发 / 测试的比例
SPLIT_FRACTIONS = (0.6, 0.2, 0.2)


def _document_text(rng, label, confusion_rate):
    own, other = (HOPE_WORDS, NOT_HOPE_WORDS) if label is Label.Hope else (NOT_HOPE_WORDS, HOPE_WORDS)
    words = list(rng.choice(own, size=3, replace=False))
    words.extend(rng.choice(FILLER_WORDS, size=int(rng.integers(5, 10))))
    if rng.random() < confusion_rate:
        words.append(rng.choice(other))
    words = [str(word) for word in rng.permutation(words)]
    if rng.random() < 0.5:
        words.insert(int(rng.integers(0, len(words) + 1)), str(rng.choice(DECORATIONS)))
    words[0] = words[0].capitalize()
    return " ".join(words) + str(rng.choice([".", "!", "?", ""]))


def generate_synthetic_corpus(n_docs=1000, seed=0, confusion_rate=0.1):
    """
    生成合成语料并按 60/20/20 划分

    Args:
        n_docs: 文档总数
        seed: 随机种子，相同种子生成完全相同的语料
        confusion_rate: 混入一个另一类别关键词的文档比例

    Returns:
        Tuple[Dataset, Dataset, Dataset]: (train, dev, test)，三个划分都带标签且类别均衡
    """
    rng = np.random.default_rng(seed)
    labels = [Label.Hope if i % 2 == 0 else Label.NotHope for i in range(n_docs)]
    labels = [labels[i] for i in rng.permutation(n_docs)]
    texts = [_document_text(rng, label, confusion_rate) for label in labels]

    n_train = int(round(n_docs * SPLIT_FRACTIONS[0]))
    n_dev = int(round(n_docs * SPLIT_FRACTIONS[1]))
    bounds = ((Split.Train, 0, n_train), (Split.Dev, n_train, n_train + n_dev), (Split.Test, n_train + n_dev, n_docs))

    datasets = []
    for split, start, end in bounds:
        documents = tuple(
            Document(id=f"{split.value}-{i}", text=texts[start + i], label=labels[start + i])
            for i in range(end - start)
        )
        datasets.append(Dataset(split=split, documents=documents))
    return tuple(datasets)
