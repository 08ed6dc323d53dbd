import pytest

from mayeksyl.script import (
    ANAP,
    APUN,
    ATIYA,
    CHEIKHEI,
    CharCategory,
    DIGITS,
    I,
    I_LONSUM,
    KOK,
    KOK_LONSUM,
    LUM,
    UN,
    chars_in_category,
    classify,
    dump_inventory,
    inventory,
    is_vowel_character,
    lonsum_base,
    lookup,
)


def test_classify_examples():
    assert classify(KOK).category is CharCategory.MAJOR_LETTER
    assert not classify(KOK).is_vowel_letter
    assert classify(ANAP).category is CharCategory.VOWEL_SIGN
    assert classify("A").category is CharCategory.FOREIGN
    assert classify(APUN).category is CharCategory.LIGATURE
    assert classify(LUM).category is CharCategory.INTONATION
    assert classify(CHEIKHEI).category is CharCategory.PUNCTUATION


def test_classify_accepts_ints_and_chars():
    assert classify(0xABC0) == classify(KOK)
    with pytest.raises(ValueError):
        classify("ab")


def test_classify_is_total_and_partitions():
    # spot-check a spread of planes: every code point gets exactly one class
    for cp in [0x0, 0x41, 0x985, 0xABBF, 0xABC0, 0xABDA, 0xABEE, 0xABFA, 0x10000]:
        assert classify(cp).category in CharCategory


def test_unassigned_block_neighbours_are_foreign():
    # U+ABEE and U+ABEF sit inside the block but are not in the inventory
    assert classify(0xABEE).category is CharCategory.FOREIGN
    assert classify(0xABEF).category is CharCategory.FOREIGN


def test_inventory_counts():
    inv = inventory()
    assert len(inv) == 56
    majors = chars_in_category(CharCategory.MAJOR_LETTER)
    assert len(majors) == 27
    assert sum(c.char_class.is_vowel_letter for c in majors) == 3
    assert len(chars_in_category(CharCategory.FINAL_LETTER)) == 8
    assert len(chars_in_category(CharCategory.VOWEL_SIGN)) == 8
    assert len(chars_in_category(CharCategory.DIGIT)) == 10
    assert len(chars_in_category(CharCategory.LIGATURE)) == 1
    assert len(chars_in_category(CharCategory.INTONATION)) == 1
    assert len(chars_in_category(CharCategory.PUNCTUATION)) == 1


def test_inventory_sorted_and_unique():
    cps = [c.codepoint for c in inventory()]
    assert cps == sorted(cps)
    assert len(set(cps)) == len(cps)


def test_vowel_characters_are_exactly_eleven():
    vowels = [c for c in inventory()
              if c.char_class.category in (CharCategory.MAJOR_LETTER, CharCategory.VOWEL_SIGN)
              and is_vowel_character(c.codepoint)]
    assert len(vowels) == 11
    assert {c.char for c in vowels} >= {UN, I, ATIYA}


def test_is_vowel_character_examples():
    assert is_vowel_character(UN)
    assert not is_vowel_character(KOK)
    assert not is_vowel_character(KOK_LONSUM)
    with pytest.raises(ValueError):
        is_vowel_character("Q")


def test_lonsum_base_examples():
    assert lonsum_base(KOK_LONSUM) == ord(KOK)
    assert lonsum_base(I_LONSUM) == ord(I)
    with pytest.raises(ValueError):
        lonsum_base(ANAP)


def test_lonsum_base_injective():
    finals = chars_in_category(CharCategory.FINAL_LETTER)
    bases = [lonsum_base(c.codepoint) for c in finals]
    assert len(set(bases)) == 8
    for base in bases:
        assert classify(base).category is CharCategory.MAJOR_LETTER


def test_lookup_accepts_both_name_traditions():
    assert lookup("onap").char == lookup("ot nap").char
    assert lookup("ANAP").char == lookup("aatap").char == ANAP
    assert lookup("atia").char == lookup("ATIYA").char
    with pytest.raises(KeyError):
        lookup("nonesuch")


def test_traditional_names_unique_within_class():
    seen = set()
    for c in inventory():
        key = (c.char_class.category, c.traditional_name)
        assert key not in seen
        seen.add(key)


def test_digit_romanization_is_decimal_value():
    by_cp = {c.codepoint: c for c in inventory()}
    for i, ch in enumerate(DIGITS):
        assert classify(ch).category is CharCategory.DIGIT
        assert by_cp[ord(ch)].romanization == str(i)


def test_dump_inventory_shape():
    dump = dump_inventory()
    lines = dump.splitlines()
    assert len(lines) == 56
    assert lines[0] == "U+ABC0\tmajor-letter\tkok\tk"
    assert all(len(line.split("\t")) == 4 for line in lines)
