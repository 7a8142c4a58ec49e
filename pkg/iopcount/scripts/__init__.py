# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Command line entry points
"""
