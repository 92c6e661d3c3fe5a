from pycoherence.io.binary_types import BinaryTypes
from pycoherence.io.config_file import read_config_file
from pycoherence.io.dataset import read_corpus
from pycoherence.io.dataset import split_corpus
from pycoherence.io.dataset import write_corpus
