"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: model_config.py
@DateTime: 2025-07-02
@Docs: 模型与算法参数配置
"""


class ModelConfig:
    """模型参数配置类"""

    # 模型分类: ER 区间半宽
    ER_BAND_HALFWIDTH = 0.1
    LCD_RHO_SUPREMUM = 0.75

    # 逆映射（二分法）
    BISECTION_RHO_TOL = 1e-10
    BISECTION_MAX_ITER = 500
    BISECTION_INITIAL_BRACKET = (1.0, 2.0)

    # 生成器
    POWERLAW_LOWER_BOUND = 1.0
    ROW_BLOCK_SIZE = 256

    # 三角形计数: 每个并行任务处理的节点数
    TRIANGLE_CHUNK_NODES = 4096
    TRIANGLE_METHOD = "hash"

    # 检验
    DEFAULT_ALPHA = 0.05
    DEFAULT_TEST_K = 2

    # 采样
    FLYBACK_P = 0.15
    JUMP_P = 0.15
    FOREST_FIRE_P = 0.7
    STALL_FACTOR = 100

    # 参议院联署网络
    WPC_THRESHOLD = 0.1

    # 自我网络扫描（仅考察度数大于该值的节点）
    EGO_MIN_DEGREE = 20
