''' Sequence sources and recall benchmarks for the memory graph. '''
from ssakg.experiments.synthgen import GenSpec, gen_sequences, draw_context
from ssakg.experiments.textingest import CorpusSpec, Vocabulary, prepare_corpus, encode_virtual
from ssakg.experiments.bench import ExperimentConfig, run_experiment, correct_elements
from ssakg.experiments.report import ExperimentReport, write_report, load_report
