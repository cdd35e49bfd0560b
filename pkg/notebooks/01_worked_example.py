# %% [markdown]
# # Four impact factors for one journal
#
# A journal that started in 2015 and has five years of data. We build the
# ledger by hand, then compute each impact-factor variant for 2019.

# %%
from jif import build_ledger, as_decimal, garfield, improved, extended, total, cohort_total

publications = [(2015, 20), (2016, 40), (2017, 50), (2018, 45), (2019, 40)]
citations = [
    # (cite_year, pub_year, count)
    (2015, 2015, 6), (2016, 2015, 15), (2017, 2015, 4), (2018, 2015, 0), (2019, 2015, 9),
    (2016, 2016, 19), (2017, 2016, 0), (2018, 2016, 8), (2019, 2016, 11),
    (2017, 2017, 10), (2018, 2017, 70), (2019, 2017, 55),
    (2018, 2018, 12), (2019, 2018, 16),
    (2019, 2019, 90),
]
journal = build_ledger("J", 2015, publications, citations)

# %% [markdown]
# Citations per cohort (all years of citing, per publication year):

# %%
for year in journal.years:
    print(year, journal.published(year), "articles,", cohort_total(journal, year), "citations")

# %% [markdown]
# Values are exact fractions; decimals are only a rendering.

# %%
for fn in (garfield, improved, extended, total):
    value = fn(journal, 2019)
    print(f"{value.method.label:<9} {str(value):>8}  ~ {as_decimal(value, 3)}")

# %% [markdown]
# In the founding year there are no prior cohorts, so the two-year window is
# empty: the Garfield value is undefined rather than zero.

# %%
from jif import UndefinedDenominator

try:
    garfield(journal, 2015)
except UndefinedDenominator as exc:
    print(exc)
