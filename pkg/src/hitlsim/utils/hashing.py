"""Fingerprints of canonical output files.

Logs are written byte-canonically, so two runs with the same seed and
configuration have the same digest.
"""

import hashlib
from pathlib import Path

DIGEST_LENGTH = 16


def file_digest(path: Path | str, length: int = DIGEST_LENGTH) -> str:
    """Truncated SHA-256 hex digest of a file's bytes.

    Raises:
        FileNotFoundError: If the file doesn't exist.
    """
    sha256 = hashlib.sha256()
    with Path(path).open("rb") as f:
        for chunk in iter(lambda: f.read(65536), b""):
            sha256.update(chunk)
    return sha256.hexdigest()[:length]
