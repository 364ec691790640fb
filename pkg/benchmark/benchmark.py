import random
import time
import warnings

from garsidelab import enumerate_class, normal_form
from garsidelab.family import alpha, family_rigid_graph
from garsidelab.utils import generate_one, random_word


def normal_forms(n, words, runs=1):
    times = []
    braids = []
    for _ in range(runs):
        start = time.time()
        braids = [normal_form(n, word) for word in words]
        end = time.time()
        times.append(end - start)
    print(f'... {runs} runs averaged {sum(times) / runs} seconds')
    return braids


def closed_form(element, runs=1):
    times = []
    graph = None
    for _ in range(runs):
        start = time.time()
        graph = family_rigid_graph(element)
        end = time.time()
        times.append(end - start)
    print(f'... {runs} runs averaged {sum(times) / runs} seconds')
    return graph


def exhaustive(element, runs=1):
    times = []
    graph = None
    for _ in range(runs):
        start = time.time()
        graph = enumerate_class(alpha(element))
        end = time.time()
        times.append(end - start)
    print(f'... {runs} runs averaged {sum(times) / runs} seconds')
    return graph


# Configuration is a tuple of (strands, word_length, num_words, num_runs)
word_configurations = [
    ('4 strands - 1,000 words of 20 - 10 runs', 4, 20, 1000, 10),
    ('8 strands - 1,000 words of 50 - 10 runs', 8, 50, 1000, 10),
    ('16 strands - 100 words of 200 - 5 runs', 16, 200, 100, 5),
]

# Configuration is a tuple of (rows, strands, num_runs, run_exhaustive)
family_configurations = [
    ('k=2 n=10 - 3 runs', 2, 10, 3, True),
    ('k=2 n=11 - 3 runs', 2, 11, 3, True),
    ('k=2 n=17 - 10 runs', 2, 17, 10, False),
    ('k=3 n=20 - 5 runs', 3, 20, 5, False),
]

rng = random.Random(0)
for desc, n, length, num_words, num_runs in word_configurations:
    print('')
    print(desc)
    words = [random_word(n, length, rng) for _ in range(num_words)]
    print(f'Normal forms of {num_words} words...')
    normal_forms(n, words, runs=num_runs)

warnings.simplefilter('ignore')
for desc, k, n, num_runs, run_exhaustive in family_configurations:
    print('')
    print(desc)
    element = generate_one(k, n, m0=True)
    print('Closed-form rigid conjugacy graph...')
    graph = closed_form(element, runs=num_runs)
    if run_exhaustive:
        print('Exhaustive rigid conjugacy set...')
        oracle = exhaustive(element, runs=1)
        assert set(graph.keys()) == set(oracle.keys())
