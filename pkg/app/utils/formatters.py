"""
Mise en forme des lignes de résultat : JSON (clés triées), TSV ou lecture humaine.

En TSV, les colonnes sont fixées par la première ligne d'une commande : les
lignes suivantes sont lues colonne par colonne, une cellule absente reste vide.
"""

from typing import Any, Dict, List, Optional, Sequence
import json


def _flatten(row: Dict[str, Any], prefix: str = '') -> Dict[str, Any]:
    flat = {}
    for key, value in row.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, name + '.'))
        else:
            flat[name] = value
    return flat


def _lookup(row: Dict[str, Any], column: str) -> Any:
    value: Any = row
    for part in column.split('.'):
        if not isinstance(value, dict) or part not in value:
            return None
        value = value[part]
    return value


def _cell(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, sort_keys=True, separators=(',', ':'))
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return str(value)


def format_json(row: Dict[str, Any]) -> str:
    return json.dumps(row, sort_keys=True, separators=(',', ':'), default=str)


def tsv_columns(row: Dict[str, Any]) -> List[str]:
    return sorted(_flatten(row))


def tsv_header(columns: Sequence[str]) -> str:
    return '\t'.join(columns)


def format_tsv(row: Dict[str, Any], columns: Optional[Sequence[str]] = None) -> str:
    if columns is None:
        columns = tsv_columns(row)
    return '\t'.join(_cell(_lookup(row, column)) for column in columns)


def format_human(row: Dict[str, Any]) -> str:
    lines: List[str] = []
    for key, value in sorted(_flatten(row).items()):
        lines.append(f"{key}: {_cell(value)}")
    return '\n'.join(lines) + '\n'


def format_row(row: Dict[str, Any], fmt: str, columns: Optional[Sequence[str]] = None) -> str:
    if fmt == 'json':
        return format_json(row)
    if fmt == 'tsv':
        return format_tsv(row, columns)
    return format_human(row)
