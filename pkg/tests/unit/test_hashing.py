"""Tests for hashing utilities."""

import hashlib
from pathlib import Path

import pytest

from hitlsim.utils.hashing import DIGEST_LENGTH, file_digest


class TestFileDigest:
    """Tests for file hashing."""

    def test_file_digest(self, temp_dir: Path) -> None:
        """Test hashing a file."""
        file_path = temp_dir / "run.jsonl"
        file_path.write_text('{"seq":1}\n')

        digest = file_digest(file_path)
        assert len(digest) == DIGEST_LENGTH
        assert digest == hashlib.sha256(b'{"seq":1}\n').hexdigest()[:DIGEST_LENGTH]

    def test_file_digest_deterministic(self, temp_dir: Path) -> None:
        """Test that identical bytes give identical digests."""
        first = temp_dir / "a.jsonl"
        second = temp_dir / "b.jsonl"
        first.write_bytes(b"same\n")
        second.write_bytes(b"same\n")
        assert file_digest(first) == file_digest(second)

    def test_file_digest_changes(self, temp_dir: Path) -> None:
        """Test that one changed byte changes the digest."""
        file_path = temp_dir / "a.jsonl"
        file_path.write_bytes(b"0.000\n")
        before = file_digest(file_path)
        file_path.write_bytes(b"0.001\n")
        assert file_digest(file_path) != before

    def test_large_file(self, temp_dir: Path) -> None:
        """Test that chunked reads hash the whole file."""
        data = bytes(range(256)) * 1000
        file_path = temp_dir / "big.bin"
        file_path.write_bytes(data)
        assert file_digest(file_path, length=64) == hashlib.sha256(data).hexdigest()

    def test_file_not_found(self, temp_dir: Path) -> None:
        """Test hashing non-existent file."""
        with pytest.raises(FileNotFoundError):
            file_digest(temp_dir / "nonexistent.jsonl")
