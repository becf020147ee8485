"""Independent reference stemmer used only to generate and check test fixtures.

Written as a generic rule-table interpreter, deliberately structured unlike
the production stemmer: every step is a data table of
(suffix, replacement, condition) rows evaluated by one engine. The engine
picks the longest matching suffix in a table; if that row's condition fails
the whole step is a no-op.
"""


def _forms(word):
    """Per-letter consonant(True)/vowel(False) classification."""
    out = []
    for i, ch in enumerate(word):
        if ch in "aeiou":
            out.append(False)
        elif ch == "y" and i > 0 and out[i - 1]:
            out.append(False)
        else:
            out.append(True)
    return out

def m_of(stem):
    forms = _forms(stem)
    return sum(
        1 for i in range(1, len(forms)) if forms[i] and not forms[i - 1]
    )

def has_vowel(stem):
    return not all(_forms(stem))

def double_cons(stem):
    f = _forms(stem)
    return len(stem) >= 2 and stem[-1] == stem[-2] and f[-1]

def cvc_end(stem):
    f = _forms(stem)
    return (
        len(stem) >= 3
        and f[-3] and not f[-2] and f[-1]
        and stem[-1] not in "wxy"
    )


def _apply_table(word, table):
    # longest suffix wins; a failed condition still consumes the step
    chosen = None
    for suffix, repl, cond in table:
        if word.endswith(suffix):
            if chosen is None or len(suffix) > len(chosen[0]):
                chosen = (suffix, repl, cond)
    if chosen is None:
        return word
    suffix, repl, cond = chosen
    stem = word[: len(word) - len(suffix)]
    if cond is None or cond(stem):
        return stem + repl
    return word


TABLE_1A = [
    ("sses", "ss", None),
    ("ies", "i", None),
    ("ss", "ss", None),
    ("s", "", None),
]

TABLE_2 = [
    ("ational", "ate", lambda s: m_of(s) > 0),
    ("tional", "tion", lambda s: m_of(s) > 0),
    ("enci", "ence", lambda s: m_of(s) > 0),
    ("anci", "ance", lambda s: m_of(s) > 0),
    ("izer", "ize", lambda s: m_of(s) > 0),
    ("abli", "able", lambda s: m_of(s) > 0),
    ("alli", "al", lambda s: m_of(s) > 0),
    ("entli", "ent", lambda s: m_of(s) > 0),
    ("eli", "e", lambda s: m_of(s) > 0),
    ("ousli", "ous", lambda s: m_of(s) > 0),
    ("ization", "ize", lambda s: m_of(s) > 0),
    ("ation", "ate", lambda s: m_of(s) > 0),
    ("ator", "ate", lambda s: m_of(s) > 0),
    ("alism", "al", lambda s: m_of(s) > 0),
    ("iveness", "ive", lambda s: m_of(s) > 0),
    ("fulness", "ful", lambda s: m_of(s) > 0),
    ("ousness", "ous", lambda s: m_of(s) > 0),
    ("aliti", "al", lambda s: m_of(s) > 0),
    ("iviti", "ive", lambda s: m_of(s) > 0),
    ("biliti", "ble", lambda s: m_of(s) > 0),
]

TABLE_3 = [
    ("icate", "ic", lambda s: m_of(s) > 0),
    ("ative", "", lambda s: m_of(s) > 0),
    ("alize", "al", lambda s: m_of(s) > 0),
    ("iciti", "ic", lambda s: m_of(s) > 0),
    ("ical", "ic", lambda s: m_of(s) > 0),
    ("ful", "", lambda s: m_of(s) > 0),
    ("ness", "", lambda s: m_of(s) > 0),
]

TABLE_4 = [
    (suf, "", lambda s: m_of(s) > 1)
    for suf in [
        "al", "ance", "ence", "er", "ic", "able", "ible", "ant",
        "ement", "ment", "ent", "ou", "ism", "ate", "iti", "ous",
        "ive", "ize",
    ]
] + [("ion", "", lambda s: m_of(s) > 1 and s.endswith(("s", "t")))]


def _step1b(word):
    if word.endswith("eed"):
        stem = word[:-3]
        if m_of(stem) > 0:
            return stem + "ee"
        return word
    for suffix in ("ed", "ing"):
        if word.endswith(suffix):
            stem = word[: len(word) - len(suffix)]
            if not has_vowel(stem):
                return word
            if stem.endswith("at") or stem.endswith("bl") or stem.endswith("iz"):
                return stem + "e"
            if double_cons(stem) and stem[-1] not in ("l", "s", "z"):
                return stem[:-1]
            if m_of(stem) == 1 and cvc_end(stem):
                return stem + "e"
            return stem
    return word


def _step1c(word):
    if word.endswith("y") and has_vowel(word[:-1]):
        return word[:-1] + "i"
    return word


def _step5(word):
    if word.endswith("e"):
        stem = word[:-1]
        m = m_of(stem)
        if m > 1:
            word = stem
        elif m == 1 and not cvc_end(stem):
            word = stem
    if m_of(word) > 1 and double_cons(word) and word.endswith("l"):
        word = word[:-1]
    return word


def oracle_stem(word):
    word = word.lower()
    if len(word) <= 2:
        return word
    word = _apply_table(word, TABLE_1A)
    word = _step1b(word)
    word = _step1c(word)
    word = _apply_table(word, TABLE_2)
    word = _apply_table(word, TABLE_3)
    word = _apply_table(word, TABLE_4)
    word = _step5(word)
    return word
