from src.report.exporter import emit
from src.report.schemas import SCHEMA_VERSION, CheckRecord, PaperReport, RunConfig, Summary
from src.report.suites import SUITES, run_suites
