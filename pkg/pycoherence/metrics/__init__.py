from pycoherence.metrics.ordering_metrics import accuracy, pmr, inversions, kendall_tau
from pycoherence.metrics.ordering_metrics import CorpusReport, corpus_report
