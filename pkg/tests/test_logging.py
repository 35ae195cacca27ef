import logging
import os
import unittest

from friezes import ENV_DEBUG, ENV_PRECISION_START, Settings, get_logger, load_settings, project_root


class LoggingTestCase(unittest.TestCase):

    def test_run_logger_prints_to_stdout(self):
        handlers = get_logger("friezes.run").handlers
        self.assertTrue(any(isinstance(h, logging.StreamHandler) and not isinstance(h, logging.FileHandler)
                            for h in handlers))

    def test_file_handler_in_project_root(self):
        file_handlers = [h for h in logging.getLogger().handlers if isinstance(h, logging.FileHandler)]
        self.assertEqual(len(file_handlers), 1)
        self.assertEqual(os.path.dirname(file_handlers[0].baseFilename), project_root)

    def test_module_loggers(self):
        self.assertEqual(get_logger("friezes.ring").getEffectiveLevel(), logging.WARNING)
        self.assertEqual(get_logger("friezes.frieze").getEffectiveLevel(), logging.INFO)


class SettingsTestCase(unittest.TestCase):

    def test_defaults(self):
        self.assertEqual(load_settings({}), Settings(precision_start=64, debug=False))

    def test_environment(self):
        settings = load_settings({ENV_PRECISION_START: "8", ENV_DEBUG: "true"})
        self.assertEqual(settings.precision_start, 8)
        self.assertTrue(settings.debug)
        self.assertFalse(load_settings({ENV_DEBUG: "0"}).debug)

    def test_invalid_precision(self):
        with self.assertRaises(ValueError):
            load_settings({ENV_PRECISION_START: "many"})
        with self.assertRaises(ValueError):
            load_settings({ENV_PRECISION_START: "1"})


if __name__ == '__main__':
    unittest.main()
