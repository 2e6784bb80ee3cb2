"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: __init__.py
@DateTime: 2025-07-13
@Docs: 基础接口: 子命令、采样器与导出器
"""
