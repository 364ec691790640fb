from typing import Dict, FrozenSet, List, Sequence, Tuple, Union

Permutation = Tuple[int, ...]
IndexSet = FrozenSet[int]
PositiveWord = Tuple[int, ...]
SignedWord = Sequence[int]
BitRow = Tuple[int, ...]
Matrix = Tuple[BitRow, ...]
BraidKey = str
JSONBraid = Dict[str, Union[int, List[List[int]]]]
