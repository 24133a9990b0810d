import os
import random

import numpy as np


def seed_everything(seed: int):
    """Seeds the global generators; the group engine draws from its own np.random.Generator."""
    random.seed(seed)
    os.environ["PYTHONHASHSEED"] = str(seed)
    np.random.seed(seed)
