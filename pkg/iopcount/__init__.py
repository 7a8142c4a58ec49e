# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
The iopcount module: inside-out Ehrhart counting of 3x3 magic, semimagic
and magilatin squares
"""
