import os.path

from src.config.config import Config
from src.config.global_config import LOG_DIR
from src.config.log.logger import Log

log = Log(
    filename=os.path.join(LOG_DIR, "einstein4.log"),
    cmdlevel=Config.log_cmd_level,
    filelevel=Config.log_file_level,
    limit=Config.log_limit,
    backup_count=Config.log_backup_count,
    colorful=True,
)
