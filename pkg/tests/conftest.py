import hypothesis.strategies as st

from itpda.store import EMPTY, Store

SYMBOLS = ("Z", "X1", "X2", "F", "B", "W")


def store_strategy(max_leaves: int = 10):
    return st.recursive(
        st.just(EMPTY),
        lambda children: st.builds(
            Store,
            st.lists(
                st.tuples(st.sampled_from(SYMBOLS), children), min_size=1, max_size=3
            ).map(tuple),
        ),
        max_leaves=max_leaves,
    )


stores = store_strategy()
nonempty_stores = store_strategy().filter(lambda s: bool(s.entries))
