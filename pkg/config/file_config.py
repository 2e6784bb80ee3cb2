"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: file_config.py
@DateTime: 2025-07-02
@Docs: 文件格式相关配置
"""


class FileConfig:
    """文件配置类"""

    # 边列表格式
    EDGE_LIST_EXTENSION = ".edges"
    COMMENT_PREFIX = "#"
    NODE_COUNT_DIRECTIVE = "%n="
    ENCODING = "utf-8"

    # 文件大小限制 (2GB)
    MAX_FILE_SIZE = 2 * 1024 * 1024 * 1024

    # 快照清单: tag, edges[, labels]
    MANIFEST_COLUMNS = ["tag", "edges", "labels"]

    # 联署记录 CSV
    SPONSORSHIP_COLUMNS = ["sponsor", "bill", "cosponsor"]
    SPONSORSHIP_TAG_COLUMN = "tag"

    # 快照统计表列顺序
    SERIES_COLUMNS = ["tag", "n", "edges", "rho_hat", "cc_hat", "cc_ratio", "true_in_out_ratio"]
