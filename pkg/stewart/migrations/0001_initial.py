from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='StoredAutomaton',
            fields=[
                ('id', models.AutoField(verbose_name='ID', serialize=False, auto_created=True, primary_key=True)),
                ('name', models.CharField(max_length=100, unique=True, verbose_name='Name')),
                ('kind', models.CharField(choices=[('recognizer', 'Recognizer'), ('word', 'Automaton with output')], default='recognizer', max_length=20, verbose_name='Kind')),
                ('variables', models.CharField(blank=True, help_text='Comma separated names of the variables read on the tracks.', max_length=255, verbose_name='Variables')),
                ('tags', models.CharField(max_length=255, verbose_name='Numeration tags')),
                ('states', models.PositiveIntegerField(verbose_name='Number of states')),
                ('walnut', models.TextField(verbose_name='Walnut text')),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='Created at')),
                ('updated_at', models.DateTimeField(auto_now=True, verbose_name='Updated at')),
            ],
            options={
                'verbose_name': 'Stored automaton',
                'verbose_name_plural': 'Stored automata',
                'ordering': ['name'],
            },
        ),
    ]
