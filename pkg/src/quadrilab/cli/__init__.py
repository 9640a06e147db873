from .main import main, run
from .parser import format_quadric, parse_polynomial, parse_quadric, tokenize
from .report import Report
