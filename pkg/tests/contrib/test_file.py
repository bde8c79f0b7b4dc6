import os
import shutil
import tempfile
import unittest
from unittest.mock import patch

from hsbnn.contrib import FileCheckpointStore


class BaseTest(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.store = FileCheckpointStore(os.path.join(self.directory, "runs"))

    def tearDown(self):
        shutil.rmtree(self.directory)


class TestFileCheckpointStore(BaseTest):
    def test_creates_its_directory(self):
        self.assertTrue(os.path.isdir(self.store.directory))

    def test_put_writes_a_file(self):
        self.store.put("CHECKPOINT", b"abc")

        with open(os.path.join(self.store.directory, "CHECKPOINT"), "rb") as f:
            self.assertEqual(f.read(), b"abc")
        self.assertEqual(self.store.get("CHECKPOINT"), b"abc")

    def test_get_missing_file_returns_none(self):
        self.assertIsNone(self.store.get("CHECKPOINT"))

    def test_delete(self):
        self.store.put("CHECKPOINT", b"abc")

        self.store.delete("CHECKPOINT")
        self.store.delete("CHECKPOINT")

        self.assertFalse(self.store.exists("CHECKPOINT"))

    def test_list_skips_directories(self):
        self.store.put("b.json", b"{}")
        self.store.put("a.csv", b"")
        os.mkdir(os.path.join(self.store.directory, "nested"))

        self.assertEqual(list(self.store.list()), ["a.csv", "b.json"])

    def test_failed_write_keeps_the_previous_file(self):
        self.store.put("CHECKPOINT", b"old")

        with patch("hsbnn.contrib.file.os.replace", side_effect=OSError("disk full")):
            with self.assertRaises(OSError):
                self.store.put("CHECKPOINT", b"new")

        self.assertEqual(self.store.get("CHECKPOINT"), b"old")
        self.assertEqual(os.listdir(self.store.directory), ["CHECKPOINT"])
