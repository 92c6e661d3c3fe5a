from pycoherence.synthetic.generator import generate_corpus
from pycoherence.synthetic.generator import position_direction
from pycoherence.synthetic.synth_config import Regime
from pycoherence.synthetic.synth_config import SynthConfig
from pycoherence.synthetic.synth_config import regime
