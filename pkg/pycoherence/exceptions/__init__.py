from pycoherence.exceptions.coherence_error import CoherenceErrorException
from pycoherence.exceptions.coherence_error import UsageErrorException
from pycoherence.exceptions.coherence_error import DataErrorException
from pycoherence.exceptions.coherence_error import DimensionErrorException
from pycoherence.exceptions.coherence_error import CheckpointVersionException
from pycoherence.exceptions.coherence_error import NumericErrorException
