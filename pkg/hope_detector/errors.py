# -*- coding: utf-8 -*-
"""
异常定义

所有异常都继承自 HopeDetectorError，并带有命令行退出码:
    1: 用法错误（参数、实验配置）
    2: 数据错误（数据文件、标签、词表、模型包）
    3: 训练错误（单一类别、不收敛）

作者: AI Assistant
"""


class HopeDetectorError(Exception):
    """项目异常基类"""
    exit_code = 1


# ==================== 用法错误 ====================

class UsageError(HopeDetectorError):
    """命令行用法错误"""
    exit_code = 1


class ConfigError(UsageError):
    """实验配置文件错误"""


# ==================== 数据错误 ====================

class DataError(HopeDetectorError):
    """数据相关错误"""
    exit_code = 2


class DataFormatError(DataError):
    """数据文件格式错误（列数不对、JSON 无法解析、id 重复等）"""

    def __init__(self, message, row=None):
        self.row = row
        if row is not None:
            message = f"第 {row} 行: {message}"
        super().__init__(message)


class LabelError(DataError):
    """无法识别的标签字符串"""

    def __init__(self, value, row=None):
        self.value = value
        self.row = row
        where = f"第 {row} 行: " if row is not None else ""
        super().__init__(f"{where}未知标签 {value!r}")


class UnlabeledError(DataError):
    """需要标签的操作遇到了无标签文档"""


class VocabularyError(DataError):
    """有效词表为空"""


class DimensionError(DataError):
    """向量维度与词表大小不一致"""


class BundleFormatError(DataError):
    """模型包格式错误"""


class ChecksumError(BundleFormatError):
    """模型包校验和不匹配或缺失"""


class UnsupportedVersionError(BundleFormatError):
    """模型包版本不受支持"""


class BundleInvariantError(BundleFormatError):
    """模型包内容违反不变量（维度不一致、概率不归一等）"""


class BundleMismatchError(DataError):
    """模型包与当前流水线配置不一致"""


# ==================== 训练错误 ====================

class TrainingError(HopeDetectorError):
    """模型训练错误"""
    exit_code = 3


class SingleClassError(TrainingError):
    """训练数据只包含一个类别"""


class ConvergenceError(TrainingError):
    """优化器在迭代上限内未收敛"""

    def __init__(self, message, duality_gap=None, kkt_gap=None):
        self.duality_gap = duality_gap
        self.kkt_gap = kkt_gap
        super().__init__(message)
