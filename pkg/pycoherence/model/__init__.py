from pycoherence.model.context_encoder import EncoderParams, init_params, encode_set, encode_set_backward
from pycoherence.model.pairwise_classifier import PairClassifierParams
from pycoherence.model.pairwise_classifier import pair_logit, order_matrix, pairwise_loss
from pycoherence.model.ordering_model import OrderingModel
