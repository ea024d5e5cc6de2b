from hypothesis import strategies as st

from zarlab.words import Family, Letter, Word, free_reduce, parse_word

# pass/fail lines from test_acceptance, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def W(text: str) -> Word:
    return parse_word(text)


letters = st.builds(
    Letter,
    st.sampled_from([Family.A, Family.X]),
    st.integers(min_value=1, max_value=3),
    st.sampled_from([-1, 1]),
)
raw_sequences = st.lists(letters, max_size=24)
words = raw_sequences.map(free_reduce)
