from loguru import logger

# library stays silent until an application enables it, as cmd.main does
logger.disable('istanbul_pricer')
