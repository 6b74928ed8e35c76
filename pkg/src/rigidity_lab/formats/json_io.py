import json
import re
from math import isfinite
from typing import Any, Optional, Type, TypeVar

from json_repair import repair_json
from loguru import logger
from pydantic import BaseModel, ValidationError

from rigidity_lab.errors import SchemaViolation
from rigidity_lab.schemas import SCHEMA_VERSION, ExperimentReport

ModelT = TypeVar('ModelT', bound=BaseModel)

_FLOAT_TAG = '__float17__:'
_TAGGED_FLOAT = re.compile(r'"' + re.escape(_FLOAT_TAG) + r'([^"]*)"')
_NON_FINITE = {'inf': float('inf'), '-inf': float('-inf'), 'nan': float('nan')}
_STR_TAG = '__str__:'


def dump_model(model: BaseModel) -> str:
    """Pretty JSON with sorted keys, the layout of partition and certificate files"""
    return json.dumps(model.model_dump(mode='json'), indent=2, sort_keys=True, ensure_ascii=False)


def load_model(text: str, model_cls: Type[ModelT]) -> Optional[ModelT]:
    """Lenient load of a hand-written JSON file into ``model_cls``

    The text is repaired first (trailing commas, single quotes, missing brackets); a record
    that still fails validation is logged and None is returned.
    """
    obj = repair_json(text, ensure_ascii=False, return_objects=True)
    try:
        return model_cls.model_validate(obj)
    except Exception as e:
        logger.warning(f"Failed to parse {model_cls.__name__}: {e}")
        return None


def _encode(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        if isfinite(value):
            return f"{_FLOAT_TAG}{format(value, '.17g')}"
        return 'nan' if value != value else ('inf' if value > 0 else '-inf')
    if isinstance(value, str) and (value in _NON_FINITE or value.startswith((_STR_TAG, _FLOAT_TAG))):
        return _STR_TAG + value
    if isinstance(value, dict):
        return {str(k): _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _decode(value: Any) -> Any:
    if isinstance(value, str) and value.startswith(_STR_TAG):
        return value[len(_STR_TAG):]
    if isinstance(value, str) and value in _NON_FINITE:
        return _NON_FINITE[value]
    if isinstance(value, dict):
        return {k: _decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_decode(v) for v in value]
    return value


def dump_report(report: ExperimentReport) -> str:
    """Canonical report JSON: sorted keys, floats at 17 significant digits, ±inf and nan as strings

    String values that would read back as those markers are written with a ``__str__:`` prefix.
    """
    if report.schema_version != SCHEMA_VERSION:
        raise SchemaViolation(f"Cannot write schema version {report.schema_version}, only {SCHEMA_VERSION}")
    text = json.dumps(_encode(report.model_dump(mode='python')), indent=2, sort_keys=True, ensure_ascii=False)
    return _TAGGED_FLOAT.sub(r'\1', text) + '\n'


def load_report(text: str) -> ExperimentReport:
    """Strict report load; unknown schema versions and malformed records raise SchemaViolation"""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaViolation(f"Report is not valid JSON: {e}") from e
    if not isinstance(obj, dict):
        raise SchemaViolation('Report must be a JSON object')
    if obj.get('schema_version') != SCHEMA_VERSION:
        raise SchemaViolation(f"Unknown report schema version {obj.get('schema_version')!r}")
    try:
        return ExperimentReport.model_validate(_decode(obj))
    except ValidationError as e:
        raise SchemaViolation(f"Malformed report: {e}") from e
