# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
File functions
"""
import os
from iopcount.util import error as err

# File utilities
__all__ = [
        'mkdir',
        'write_text',
]

def mkdir(file_path: str):
    """
    Creates a new directory, parents included. Existing directories are fine.
    """
    try:
        os.makedirs(file_path, exist_ok=True)
    except FileExistsError as exc:
        raise err.GenericError(f'Path exists and is not a directory: {file_path}') from exc
    except Exception as exc:
        raise err.GenericError(f'There was another error: {exc}') from exc

def write_text(file_path: str, content: str):
    """
    Writes text output (csv, json, b-file) to a path, creating the parent
    directory when needed. The file is replaced atomically.
    """
    parent = os.path.dirname(os.path.abspath(file_path))
    mkdir(parent)
    temp_path = file_path + '.part'
    try:
        with open(temp_path, 'w', encoding='utf-8', newline='') as out_file:
            out_file.write(content)
        os.replace(temp_path, file_path)
    except IOError as exc:
        raise err.GenericError(f'Could not write file {file_path}: {exc}') from exc
