from mzvlab.files.utils import (
    append_jsonl,
    iter_jsonl,
    read_json,
    read_jsonl,
    read_toml,
    write_json,
)

__all__ = [
    "append_jsonl",
    "iter_jsonl",
    "read_json",
    "read_jsonl",
    "read_toml",
    "write_json",
]
