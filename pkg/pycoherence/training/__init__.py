from pycoherence.training.adam import OptimizerState
from pycoherence.training.adam import adam_step
from pycoherence.training.checkpoint import Checkpoint
from pycoherence.training.checkpoint import load_checkpoint
from pycoherence.training.checkpoint import save_checkpoint
from pycoherence.training.epoch import EpochStats
from pycoherence.training.epoch import train_epoch
from pycoherence.training.train_config import Alternation
from pycoherence.training.train_config import TrainConfig
from pycoherence.training.trainer_io import TrainerIO


class Trainer(TrainerIO):
    pass
