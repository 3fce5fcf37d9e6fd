import os.path

from src.config.config import Config
from src.config.global_config import LOG_DIR
from src.config.log.logger import Log

log = None


def get_logger():
    global log
    if log is None:
        log = Log(
            filename=os.path.join(LOG_DIR, "cli.log"),
            cmdlevel=Config.log_cmd_level,
            filelevel=Config.log_file_level,
            limit=Config.log_limit,
            backup_count=Config.log_backup_count,
            colorful=False,
        )
    return log
