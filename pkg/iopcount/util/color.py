# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Color classes
"""
__all__ = [
        'Color',
        'paint',
]

# pylint: disable=too-few-public-methods
class Color:
    """
    Supported colors
    """
    RED = "\033[91m"
    GREEN = "\033[92m"
    CYAN = "\033[96m"
    YELLOW = "\033[93m"
    BOLD = "\033[1m"
    END = "\033[0m"
    INFO = "[" + BOLD + GREEN + "INFO" + END + "] "
    WARN = "[" + BOLD + YELLOW + "WARN" + END + "] "
    FAIL = "[" + BOLD + RED + "FAIL" + END + "] "
    STAT = "[" + BOLD + CYAN + "STAT" + END + "] "

def paint(prefix: str, message: str, enabled: bool = True) -> str:
    """
    Prefix a status line. Machine-readable output never goes through here;
    plain "[FAIL] " style prefixes are used when color is disabled.
    """
    if enabled:
        return prefix + message
    plain = prefix
    for code in (Color.BOLD, Color.GREEN, Color.YELLOW, Color.RED, Color.CYAN, Color.END):
        plain = plain.replace(code, '')
    return plain + message
