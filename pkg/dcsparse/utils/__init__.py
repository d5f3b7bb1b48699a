from dcsparse.utils.file_utils import (
    ensure_dir,
    ensure_parent,
    read_text,
    sidecar_path,
)

__all__ = [
    "ensure_dir",
    "ensure_parent",
    "read_text",
    "sidecar_path",
]
