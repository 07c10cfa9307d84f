import os
import tempfile
from pathlib import Path
from unittest import mock

from django.test import SimpleTestCase

from prcf_lab.env import env_float, env_int, env_str, load_dotenv


class DotenvTests(SimpleTestCase):
    def test_file_values_fill_gaps_only(self):
        with tempfile.TemporaryDirectory() as tmp:
            env_file = Path(tmp) / ".env"
            env_file.write_text(
                "# budget\n"
                "PRCF_MAX_NODES=5_000\n"
                "export PRCF_WORKERS='4'\n"
                "PRCF_LOG_LEVEL=debug\n"
                "not a setting\n"
            )
            with mock.patch.dict(os.environ, {"PRCF_LOG_LEVEL": "WARNING"}, clear=True):
                load_dotenv(env_file)
                self.assertEqual(env_int("MAX_NODES", None), 5000)
                self.assertEqual(env_int("WORKERS", 1), 4)
                self.assertEqual(env_str("LOG_LEVEL", "INFO"), "WARNING")
                self.assertNotIn("not a setting", os.environ)

    def test_missing_file_is_ignored(self):
        with mock.patch.dict(os.environ, {}, clear=True):
            load_dotenv(Path("/nonexistent/.env"))
            self.assertEqual(dict(os.environ), {})


class TypedReaderTests(SimpleTestCase):
    def test_defaults_and_errors(self):
        with mock.patch.dict(os.environ, {"PRCF_MAX_SECONDS": "2.5", "PRCF_WORKERS": " "}, clear=True):
            self.assertEqual(env_float("MAX_SECONDS", None), 2.5)
            self.assertEqual(env_int("WORKERS", 1), 1)
            self.assertIsNone(env_float("MISSING", None))
        with mock.patch.dict(os.environ, {"PRCF_WORKERS": "many"}, clear=True):
            with self.assertRaisesMessage(ValueError, "PRCF_WORKERS must be an integer"):
                env_int("WORKERS", 1)
