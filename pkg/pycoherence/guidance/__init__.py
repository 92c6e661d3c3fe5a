from pycoherence.guidance.guidance_config import GuidanceConfig, GuidanceMode, GuidanceDirection
from pycoherence.guidance.cgo_mu import Axis, mask_matrix, align_argmax, normalize_pairs, normalize_pairs_backward, cgo_mu
