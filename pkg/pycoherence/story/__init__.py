from pycoherence.story.modality import Modality
from pycoherence.story.permutation import Permutation
from pycoherence.story.order_matrix import OrderScoreMatrix
from pycoherence.story.similarity import CrossModalSimilarity
from pycoherence.story.element_set import ElementSet
from pycoherence.story.story_pair import StoryPair
from pycoherence.story.validation import validate_story, validate_corpus
