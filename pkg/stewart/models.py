import logging

from django.db import models
from django.utils.translation import gettext_lazy as _

from stewart.automata.walnut import read_walnut, write_walnut
from stewart.exceptions import UnresolvedName

logger = logging.getLogger('stewart.library')


class AutomatonKind(models.TextChoices):
    RECOGNIZER = 'recognizer', _("Recognizer")
    WORD = 'word', _("Automaton with output")


class StoredAutomatonManager(models.Manager):
    def store(self, name, automaton, variables=()):
        """
        Persist a recognizer or an automaton with output in Walnut's text format, replacing
        any earlier entry of the same name.
        """
        from stewart.automata.base import MultiTrackDfa

        kind = AutomatonKind.RECOGNIZER if isinstance(automaton, MultiTrackDfa) else AutomatonKind.WORD
        stored, created = self.update_or_create(name=name, defaults=dict(
            kind=kind,
            variables=','.join(variables),
            tags=' '.join('lsd_{}'.format(b) for b in automaton.bases),
            states=automaton.num_states,
            walnut=write_walnut(automaton),
        ))
        logger.info("%s automaton '%s' with %d states", "Stored" if created else "Replaced", name, stored.states)
        return stored

    def load(self, name):
        try:
            return self.get(name=name)
        except self.model.DoesNotExist:
            raise UnresolvedName("No automaton named '{}' in the library.".format(name))

    def load_into(self, session, names=None):
        """
        Register the stored recognizers as predicates and the stored automata with output as
        words of ``session``.
        """
        queryset = self.all() if names is None else self.filter(name__in=names)
        for stored in queryset:
            if stored.kind == AutomatonKind.WORD:
                session.register_word(stored.name, stored.automaton)
            else:
                session.register(stored.name, stored.automaton, stored.variable_names)
        return session


class StoredAutomaton(models.Model):
    """
    An automaton of the library, kept in Walnut's text format.
    """
    name = models.CharField(
        _("Name"),
        max_length=100,
        unique=True,
    )

    kind = models.CharField(
        _("Kind"),
        max_length=20,
        choices=AutomatonKind.choices,
        default=AutomatonKind.RECOGNIZER,
    )

    variables = models.CharField(
        _("Variables"),
        max_length=255,
        blank=True,
        help_text=_("Comma separated names of the variables read on the tracks."),
    )

    tags = models.CharField(
        _("Numeration tags"),
        max_length=255,
    )

    states = models.PositiveIntegerField(
        _("Number of states"),
    )

    walnut = models.TextField(
        _("Walnut text"),
    )

    created_at = models.DateTimeField(
        _("Created at"),
        auto_now_add=True,
    )

    updated_at = models.DateTimeField(
        _("Updated at"),
        auto_now=True,
    )

    objects = StoredAutomatonManager()

    class Meta:
        app_label = 'stewart'
        verbose_name = _("Stored automaton")
        verbose_name_plural = _("Stored automata")
        ordering = ['name']

    def __str__(self):
        return self.name

    @property
    def variable_names(self):
        return tuple(v for v in self.variables.split(',') if v)

    @property
    def automaton(self):
        return read_walnut(self.walnut, recognizer=self.kind == AutomatonKind.RECOGNIZER)
