# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Start up the util module with no defaults
"""
