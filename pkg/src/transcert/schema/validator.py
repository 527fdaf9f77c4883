import json
import logging
from enum import StrEnum
from functools import lru_cache
from pathlib import Path
from typing import Any

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

import transcert.schema.v1 as v1

logger = logging.getLogger(__name__)

SCHEMA_V1_DIR = Path(v1.__file__).parent


class DocumentKind(StrEnum):
    ROOTS = "roots"
    CERTIFICATE = "certificate"
    TABLE = "table"
    STATS = "stats"
    DIGITS = "digits"


def _load(kind: DocumentKind) -> dict[str, Any]:
    with open(SCHEMA_V1_DIR / f"{kind}.schema.json") as fp:
        return json.load(fp)


@lru_cache
def schema_registry() -> Registry:
    """Every shipped schema registered under its $id (so cross document $refs resolve locally)"""
    resources = [Resource.from_contents(_load(kind)) for kind in DocumentKind]
    return Registry().with_resources((resource.id(), resource) for resource in resources)  # type: ignore


@lru_cache
def schema_validator(kind: DocumentKind) -> Draft202012Validator:
    return Draft202012Validator(_load(kind), registry=schema_registry())


def validate_json(document: Any, kind: DocumentKind | str) -> list[str]:
    """Validates a JSON document (already decoded, or as text) against the shipped schema for kind. Returns a
    list of human readable errors. An empty list means the document is schema valid"""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except Exception as exc:
            preview = document[:32]
            logger.error(f"validate_json: Failure parsing string starting '{preview}'... as JSON", exc_info=exc)
            return [f"The provided document '{preview}'... does NOT parse as JSON"]

    validator = schema_validator(DocumentKind(kind))
    errors = sorted(validator.iter_errors(document), key=lambda e: e.json_path)
    return [f"{'/'.join(str(p) for p in e.absolute_path) or '(root)'}: {e.message}" for e in errors]
