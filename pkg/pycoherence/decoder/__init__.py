from pycoherence.decoder.topological import node_scores, decode_order, order_objective, brute_force_decode
