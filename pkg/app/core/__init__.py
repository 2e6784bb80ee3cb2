"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: __init__.py
@DateTime: 2025-07-13
@Docs: 核心模块: 异常、错误处理、依赖注入与命令注册
"""
