from pycoherence.inference.inference_config import InferenceConfig
from pycoherence.inference.iterative import InferenceResult
from pycoherence.inference.iterative import TraceStep
from pycoherence.inference.iterative import evaluate_corpus
from pycoherence.inference.iterative import export_reports
from pycoherence.inference.iterative import iterative_infer
from pycoherence.inference.iterative import iterative_refine
