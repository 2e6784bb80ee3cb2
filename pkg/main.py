"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: main.py
@DateTime: 2025-07-13
@Docs: 归一化聚类系数分析工具主入口
"""

import sys

from app.run import main

if __name__ == "__main__":
    sys.exit(main())
