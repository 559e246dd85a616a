# -*- coding: utf-8 -*-
"""
持久化模块

子模块:
    bundle: 带版本和校验和的模型包读写 (ModelBundle)

作者: AI Assistant
"""

from hope_detector.persist.bundle import (
    ModelBundle,
    bundle_digest,
    check_bundle,
    dumps_bundle,
    load_bundle,
    loads_bundle,
    save_bundle,
)

__all__ = [
    "ModelBundle",
    "bundle_digest",
    "check_bundle",
    "dumps_bundle",
    "load_bundle",
    "loads_bundle",
    "save_bundle",
]
